try:
    from ._powgraph import *  # noqa: F401,F403
    from ._powgraph import __doc__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits next to this package on sys.path
    from _powgraph import *  # noqa: F401,F403
