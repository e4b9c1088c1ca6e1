"""Command-line front end for svetlichny_core."""
