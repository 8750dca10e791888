from .constants import *
from .utilities import *
from .intlat import *
from .permgrp import *
from .glat import *
from .cohom import *
from .flabby import *
from .hnp import *
from .catalog import *
from .main import *
