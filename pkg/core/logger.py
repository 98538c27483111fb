import logging
import sys

FORMAT = '%(asctime)s | %(levelname)s | %(name)s | %(message)s'

def setup_logging(verbose: bool = False) -> None:
    root = logging.getLogger('grassmann')
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FORMAT))
        root.addHandler(handler)
        
def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f'grassmann.{name}')
