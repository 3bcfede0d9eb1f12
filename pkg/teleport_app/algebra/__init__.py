from .Multivector import *
from .comb import *
from .LatticeMultivector import *
