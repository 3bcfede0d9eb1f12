from .StateVector import *
from .simulator import *
