"""
Main entry point for the HeckeLab command line.
"""

import sys
from pathlib import Path

# Add src to Python path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

from cli import run


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
