"""Puts the project root on sys.path so the suites under tests/ import slicekit without installation"""
