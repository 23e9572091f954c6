"""Command-line front end: argparse application and text file formats."""
