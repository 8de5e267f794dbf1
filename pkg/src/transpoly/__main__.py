from transpoly.cli import main
import sys

sys.exit(main())
