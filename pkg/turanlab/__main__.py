import sys

from turanlab.main import main

sys.exit(main())
