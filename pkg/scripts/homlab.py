from homlab.cli import main
from dotenv import load_dotenv
import logging


load_dotenv()
logging.basicConfig(level=logging.INFO, format='%(message)s')


if __name__ == "__main__":
    main()
