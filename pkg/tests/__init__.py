"""
Test suite for sieveforge.
"""
