from .cli import main, run
from .config import RunConfig
