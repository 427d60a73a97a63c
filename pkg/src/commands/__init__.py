"""
Command registry
Collects the subcommands of the CLI
"""

import argparse

from src.commands import construct, sweep, verify


def register_all(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    """Attach every subcommand

    Args:
        subparsers: The CLI's subparser collection
        common: Parent parser holding the flags shared by all commands
    """
    construct.register(subparsers, common)
    verify.register(subparsers, common)
    sweep.register(subparsers, common)
