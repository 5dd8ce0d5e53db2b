from pentapencil.cli import main
import sys

sys.exit(main())
