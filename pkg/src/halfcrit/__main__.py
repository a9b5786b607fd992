"""
    Halfcrit: Classifier uncertainty auditing

    Allows the command line tool to be invoked as python -m halfcrit

"""

from .cli import main

raise SystemExit(main())
