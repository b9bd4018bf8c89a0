# Copyright (c) iasikit authors. All rights reserved.

from .version import __version__
from .core import *
from .utils import *
from .config import *
from .fileio import *
from .sets import *
from .graph import *
from .labeling import *
from .construct import *
from .harness import *
