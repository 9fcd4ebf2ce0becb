import sys

from app.cli import main

# Dashboard: streamlit run streamlit_app.py

if __name__ == '__main__':
    sys.exit(main())
