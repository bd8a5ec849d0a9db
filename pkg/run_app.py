#!/usr/bin/env python3
"""
Launcher script for the domination benchmark toolkit.
Runs the command line from the app directory.
"""

import sys
from pathlib import Path

def main():
    # Get the directory where this script is located
    script_dir = Path(__file__).parent
    app_dir = script_dir / "app"

    # Check if app directory exists
    if not app_dir.exists():
        print("Error: app directory not found!", file=sys.stderr)
        print("Make sure you're running this from the project root directory.", file=sys.stderr)
        sys.exit(1)

    # Add app directory to Python path
    sys.path.insert(0, str(app_dir))

    # Import and run the command line
    try:
        from main import cli_main
    except ImportError as e:
        print(f"Error importing the toolkit: {e}", file=sys.stderr)
        print("Make sure all required dependencies are installed:", file=sys.stderr)
        print("pip install -r requirements.txt", file=sys.stderr)
        sys.exit(1)
    sys.exit(cli_main(sys.argv[1:]))

if __name__ == "__main__":
    main()
