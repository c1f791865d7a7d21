from zero2hero.cli import create_cli
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

if __name__ == '__main__':
    logger.debug('Starting zero2hero from main.py')
    create_cli()(prog_name='zero2hero')
