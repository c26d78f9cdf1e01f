try:
    from ._askey import *  # noqa: F401,F403
    from ._askey import __doc__  # noqa: F401
except ImportError:
    from _askey import *  # noqa: F401,F403
