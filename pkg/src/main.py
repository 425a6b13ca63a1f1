"""
bitextminer - Main application entry point.

Mines parallel sentence pairs from comparable bilingual wiki articles.
"""

import sys

from dotenv import load_dotenv

# Load environment variables first
load_dotenv()

from bitextminer.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
