# turanlab: exact toolkit for generalized Turan problems
__version__ = "1.0.0"
