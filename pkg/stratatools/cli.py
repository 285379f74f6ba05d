# -*- coding: utf-8 -*-
# stratatools - command-line plumbing: run configuration, dispatch, emission
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
"""Cli - run configuration and report emission shared by strata subcommands

Every subcommand module parses its flags into RunConfig and hands it to run,
which calls the module's report(cfg), writes the report as JSON or as table
and maps errors to exit statuses:

    0   success
    1   usage error                 E: UsageError: ...
    2   domain error                E: <code>: ...   e.g. NotAdmissible
    3   input/output error          E: IoError: ...

Every failure prints exactly one E: line to stderr.
"""

from __future__ import print_function

from collections import OrderedDict
import importlib
import io
import json
import logging as log
import os
import sys

from golang import func, defer
from golang.gcompat import qq

from stratatools.core import StrataError, Genus
from stratatools.util import tojson, render_table, readfile, writeout, utext


EXIT_OK     = 0
EXIT_USAGE  = 1
EXIT_DOMAIN = 2
EXIT_IO     = 3

FORMATS = ('json', 'table')

# environment variable overriding default output format
FORMAT_ENV = 'STRATA_FORMAT'


class UsageError(Exception):
    code = 'UsageError'

class IoError(Exception):
    code = 'IoError'


# command name -> name of module implementing it
command_modules = OrderedDict([
    ('enumerate',       'strataenumerate'),
    ('check-type',      'stratacheck'),
    ('dims',            'stratadims'),
    ('strata',          'stratastrata'),
    ('simpson3',        'stratasimpson3'),
    ('iterate-step',    'strataiterate'),
    ('moduli',          'stratamoduli'),
])

def command_module(command):
    modname = command_modules.get(command)
    if modname is None:
        raise UsageError("unknown command %s" % qq(command))
    return importlib.import_module('stratatools.' + modname)


# RunConfig is configuration of one strata command run.
class RunConfig(object):
    # .command      str             key of command_modules
    # .rank         int | None
    # .genus        int | None
    # .format       'json' | 'table' | None     None: resolve_format decides
    # .input_path   str | None
    # .output_path  str | None
    # .jobs         int             number of enumeration workers
    # .params       {}              command-specific flags, e.g. 'ranks', 'shape'
    def __init__(self, command, rank=None, genus=None, format=None,
                 input_path=None, output_path=None, jobs=1, **params):
        self.command     = command
        self.rank        = rank
        self.genus       = genus
        self.format      = format
        self.input_path  = input_path
        self.output_path = output_path
        self.jobs        = jobs
        self.params      = params

    # need returns required config value, raising UsageError if it is missing.
    def need(self, name):
        if name in ('rank', 'genus', 'input_path'):
            x = getattr(self, name)
        else:
            x = self.params.get(name)
        if x is None:
            flag = {'input_path': 'file'}.get(name, name).replace('_', '-')
            raise UsageError("--%s is required" % flag)
        return x

    # validate checks invariants of configured values.
    def validate(self):
        if self.genus is not None:
            Genus(self.genus)
        if self.rank is not None and self.rank < 1:
            raise UsageError("--rank must be >= 1; got %d" % self.rank)
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1; got %d" % self.jobs)
        if self.format is not None and self.format not in FORMATS:
            raise UsageError("invalid format %s" % qq(self.format))


# atoi parses integer value of command-line option.
def atoi(opt, arg): # -> int
    try:
        return int(arg)
    except ValueError:
        raise UsageError("%s: invalid integer %s" % (opt, qq(arg)))

# atoiv parses comma-separated integers, e.g. "1,-1".
def atoiv(opt, arg): # -> [] int
    return [atoi(opt, _) for _ in arg.split(',')]


# short/long options understood by common_option
COMMON_SHORTOPTS = "hr:g:f:o:j:i:"
COMMON_LONGOPTS  = ["help", "rank=", "genus=", "format=", "output=", "jobs=", "file="]

# common_option applies option shared by all commands to cfg.
def common_option(cfg, opt, arg):
    if opt in ("-r", "--rank"):
        cfg.rank = atoi(opt, arg)
    elif opt in ("-g", "--genus"):
        cfg.genus = atoi(opt, arg)
    elif opt in ("-f", "--format"):
        cfg.format = arg
    elif opt in ("-o", "--output"):
        cfg.output_path = arg
    elif opt in ("-j", "--jobs"):
        cfg.jobs = atoi(opt, arg)
    elif opt in ("-i", "--file"):
        cfg.input_path = arg
    else:
        raise UsageError("unknown option %s" % opt)


# resolve_format returns output format for cfg.
#
# Explicit --format wins, then $STRATA_FORMAT, then table for a terminal
# and json otherwise.
def resolve_format(cfg, out): # -> str
    if cfg.format is not None:
        fmt = cfg.format
    elif os.environ.get(FORMAT_ENV):
        fmt = os.environ[FORMAT_ENV]
        if fmt not in FORMATS:
            raise UsageError("$%s: invalid format %s" % (FORMAT_ENV, qq(fmt)))
    elif cfg.output_path is None and _isatty(out):
        fmt = 'table'
    else:
        fmt = 'json'
    return fmt

def _isatty(out):
    try:
        return out.isatty()
    except (AttributeError, ValueError):
        return False


# load_json loads JSON document from file at path.
def load_json(path):
    try:
        text = readfile(path)
    except (IOError, OSError) as e:
        raise IoError("cannot read %s: %s" % (qq(path), e.strerror or e))
    try:
        return json.loads(text)
    except ValueError as e:
        raise IoError("%s: invalid JSON: %s" % (qq(path), e))


# emit writes text to file at path, or to out if path is None.
@func
def emit(text, path, out):
    if path is None:
        writeout(out, text)
        return
    try:
        f = io.open(path, 'w', encoding='utf-8')
    except (IOError, OSError) as e:
        raise IoError("cannot write %s: %s" % (qq(path), e.strerror or e))
    defer(f.close)
    f.write(utext(text))


# fail reports error e on stderr and returns corresponding exit status.
def fail(e, stderr=None): # -> exit status
    stderr = stderr or sys.stderr
    print("E: %s: %s" % (e.code, e), file=stderr)
    if isinstance(e, UsageError):
        return EXIT_USAGE
    if isinstance(e, IoError):
        return EXIT_IO
    return EXIT_DOMAIN


# run executes command configured by cfg and returns exit status.
def run(cfg, stdout=None, stderr=None): # -> exit status
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        module = command_module(cfg.command)
        cfg.validate()
        fmt = resolve_format(cfg, stdout)
        log.info("strata %s: rank=%s genus=%s format=%s", cfg.command, cfg.rank, cfg.genus, fmt)

        report = module.report(cfg)
        text = tojson(report) if fmt == 'json' else render_table(report)
        emit(text, cfg.output_path, stdout)
    except (UsageError, IoError, StrataError) as e:
        return fail(e, stderr)

    if not report.ok():
        code, msg = module.failure(report)
        print("E: %s: %s" % (code, msg), file=stderr)
        return EXIT_DOMAIN
    return EXIT_OK


# usage_error reports command-line parsing error and returns exit status.
def usage_error(e, usage, stderr=None): # -> exit status
    stderr = stderr or sys.stderr
    print("E: UsageError: %s" % e, file=stderr)
    usage(stderr)
    return EXIT_USAGE
