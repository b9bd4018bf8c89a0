# Copyright (c) iasikit authors. All rights reserved.
from .main import main

if __name__ == "__main__":
    main()
