import sys

from hat.seidel.main import main


if __name__ == '__main__':
    sys.argv[0] = 'hat-seidel'
    sys.exit(main())
