#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2025-2026  Nexedi SA and Contributors.
#
# This program is free software: you can Use, Study, Modify and Redistribute
# it under the terms of the GNU General Public License version 3, or (at your
# option) any later version, as published by the Free Software Foundation.
#
# You can also Link and Combine this program with other software covered by
# the terms of any of the Free Software licenses or any of the Open Source
# Initiative approved licenses and Convey the resulting work. Corresponding
# source of such a combination shall include the source code for all other
# software used.
#
# This program is distributed WITHOUT ANY WARRANTY; without even the implied
# warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
# See COPYING file for full licensing terms.
# See https://www.nexedi.com/licensing for rationale and options.
"""Strata is a driver program for invoking stratatools subcommands"""

from __future__ import print_function

from stratatools import help as help_module
from stratatools import cli

import getopt
import logging
import sys


# command_name -> command_module
command_dict = {}

def register_command(cmdname):
    command_dict[cmdname] = cli.command_module(cmdname)

for _ in cli.command_modules:
    register_command(_)



def usage(out):
    print("""\
Strata is a tool for computing with the oper stratification of de Rham moduli.

Usage:

    strata [-v] command [arguments]

The commands are:
""", file=out)

    for cmd, cmd_module in sorted(command_dict.items()):
        print("    %-13s %s" % (cmd, cmd_module.summary), file=out)

    print("""\

Use "strata help [command]" for more information about a command.

Additional help topics:
""", file=out)

    # NOTE no sorting here - topic_dict is pre-ordered
    for topic, (topic_summary, _) in help_module.topic_dict.items():
        print("    %-13s %s" % (topic, topic_summary), file=out)

    print("""\

Use "strata help [topic]" for more information about that topic.

Options:

    -v  --verbose   log progress to stderr; repeat for debug output
    -h  --help      show this help
""", file=out)


# help shows general help or help for a command/topic
def help(argv):
    if len(argv) < 2:   # help topic ...
        usage(sys.stderr)
        sys.exit(cli.EXIT_USAGE)

    topic = argv[1]

    # topic can either be a command name or a help topic
    if topic in command_dict:
        command = command_dict[topic]
        command.usage(sys.stdout)
        sys.exit(0)

    if topic in help_module.topic_dict:
        _, topic_help = help_module.topic_dict[topic]
        print(topic_help)
        sys.exit(0)

    print("E: UsageError: unknown help topic `%s`.  Run 'strata help'." % topic, file=sys.stderr)
    sys.exit(cli.EXIT_USAGE)


def main():
    try:
        optv, argv = getopt.getopt(sys.argv[1:], "hv", ["help", "verbose"])
    except getopt.GetoptError as e:
        print("E: UsageError: %s" % e, file=sys.stderr)
        usage(sys.stderr)
        sys.exit(cli.EXIT_USAGE)

    verbose = 0
    for opt, _ in optv:
        if opt in ("-h", "--help"):
            usage(sys.stdout)
            sys.exit(0)
        if opt in ("-v", "--verbose"):
            verbose += 1

    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    if len(argv) < 1:
        usage(sys.stderr)
        sys.exit(cli.EXIT_USAGE)

    command = argv[0]

    # help on a topic
    if command=="help":
        return help(argv)

    # run subcommand
    command_module = command_dict.get(command)
    if command_module is None:
        print('E: UsageError: unknown subcommand "%s"' % command, file=sys.stderr)
        print("Run 'strata help' for usage.", file=sys.stderr)
        sys.exit(cli.EXIT_USAGE)

    return command_module.main(argv)


if __name__ == '__main__':
    main()
