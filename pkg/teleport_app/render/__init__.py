from .colorwheel import *
from .scene import *
from .svg import *
