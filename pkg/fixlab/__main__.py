"""Run the command-line interface with `python -m fixlab`."""

from fixlab.cli.app import main


if __name__ == "__main__":
    main()
