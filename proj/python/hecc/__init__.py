from ._hecc import *  # noqa: F401,F403
