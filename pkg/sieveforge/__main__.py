"""
Entry point for running sieveforge as a module.
"""

from sieveforge.cli import main

if __name__ == "__main__":
    main()
