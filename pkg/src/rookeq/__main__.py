from rookeq.cli import main
import sys

sys.exit(main())
