# main.py

import logging
import sys

from src.presentation.cli.commands import cli


def main():
    """Entry point for the fuchsian-spectra command."""
    try:
        return cli.main(prog_name="fuchsian-spectra")
    except KeyboardInterrupt:
        logging.getLogger(__name__).info("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    main()
