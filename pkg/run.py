#!/usr/bin/env python
"""
Script principal de spatialgen
Uso: python run.py <subcomando> [opciones]
     python run.py --help
"""
import sys

from spatialgen.cli import cli

if __name__ == '__main__':
    sys.exit(cli())
