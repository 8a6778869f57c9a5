from .factorization_cli import main, make_parser
from .run_config import RunConfig
