from .codec import *
