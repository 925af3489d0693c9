"""
Complete bayonet code toolkit
Main entry point for the command line
"""

import sys
import logging
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.cli_core import BayonetToolkitCli
from src.config import ConfigManager
from src.utils.logger import setup_logging


def main(argv=None) -> int:
    """Main entry point"""
    argv = list(sys.argv[1:] if argv is None else argv)
    config_manager = ConfigManager()
    config = config_manager.get_toolkit_config()
    logger = setup_logging(log_level=config.log_level, log_file=config.log_file)
    logger.debug(f"Starting bayonet {' '.join(argv)}")

    try:
        cli = BayonetToolkitCli(config_manager)
        return cli.main(argv)
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        return 130
    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        return 4


if __name__ == "__main__":
    sys.exit(main())
