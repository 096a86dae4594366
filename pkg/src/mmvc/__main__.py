import sys

from mmvc.cli import main

sys.exit(main())
