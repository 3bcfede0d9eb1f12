from .Gate import *
from .geometric import *
