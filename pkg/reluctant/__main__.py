import sys

from reluctant.main import main

sys.exit(main())
