from subres.cli import main
import sys

sys.exit(main())
