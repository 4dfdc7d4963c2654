# Copyright (c) 2026, the slicekit authors
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#     * Redistributions of source code must retain the above copyright
#       notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above copyright
#       notice, this list of conditions and the following disclaimer in the
#       documentation and/or other materials provided with the distribution.
#     * Neither the name of organization nor the
#       names of its contributors may be used to endorse or promote products
#       derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE SLICEKIT AUTHORS ''AS IS'' AND ANY
# EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
# WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE SLICEKIT AUTHORS BE LIABLE FOR ANY
# DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND
# ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
import argparse
import logging
import sys

from . import corpus
from .config import DEFAULT_SINK_METHODS
from .config import DEFAULT_WRAPPER_TYPES
from .config import FORMAT_DOT
from .config import FORMAT_JSON
from .config import FORMAT_TEXT
from .config import MODE_ALL_WRITERS
from .config import MODES
from .config import RunConfig
from .depgraph import build_graph
from .diagnostics import disableLogging
from .diagnostics import enableLogging
from .diagnostics import logger
from .exceptions import EXIT_INTERNAL_ERROR
from .exceptions import EXIT_MISMATCH
from .exceptions import EXIT_SUCCESS
from .exceptions import InvalidConfiguration
from .exceptions import SlicekitException
from .exceptions import SourceException
from .exceptions import UnknownMethod
from .export import slice_to_json
from .export import to_dot
from .export import to_json
from .parser import parse_method
from .slicer import SliceCriterion
from .slicer import compute_slice
from .utils import read_text

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidConfiguration(message)

def _build_argument_parser():
    parser = _ArgumentParser(prog="slicekit",
                             description="Backward slices of output stream writes in mini-Java methods")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug information to stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    slice_parser = commands.add_parser("slice", help="slice a method on its output stream")
    slice_parser.add_argument("file")
    slice_parser.add_argument("--stream", required=True, help="the output stream variable")
    slice_parser.add_argument("--sinks", default=",".join(sorted(DEFAULT_SINK_METHODS)),
                              help="comma separated sink method names (default: %(default)s)")
    slice_parser.add_argument("--wrappers", default=",".join(sorted(DEFAULT_WRAPPER_TYPES)),
                              help="comma separated stream wrapper classes (default: %(default)s)")
    slice_parser.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_JSON], default=FORMAT_TEXT)
    slice_parser.add_argument("--emit-graph", action="store_true", help="also emit the dependency graph")

    graph_parser = commands.add_parser("graph", help="print the dependency graph of a method")
    graph_parser.add_argument("file")
    graph_parser.add_argument("--format", choices=[FORMAT_DOT, FORMAT_JSON], default=FORMAT_DOT)

    for subparser in (slice_parser, graph_parser):
        subparser.add_argument("--mode", choices=MODES, default=MODE_ALL_WRITERS)
        subparser.add_argument("--method", default=None, help="name of the method to analyze")
        subparser.add_argument("--strict", action="store_true", help="reject undeclared variables")

    corpus_parser = commands.add_parser("corpus", help="check a directory of programs against golden slices")
    corpus_parser.add_argument("directory")
    corpus_parser.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_JSON], default=FORMAT_TEXT)
    corpus_parser.add_argument("--mode", choices=MODES, default=MODE_ALL_WRITERS)
    return parser

def _config_from_arguments(args):
    if args.command == "graph":
        return RunConfig(args.file, methodName=args.method, mode=args.mode, outputFormat=args.format,
                         emitGraph=True, strict=args.strict)
    return RunConfig(args.file, streamVariable=args.stream, methodName=args.method, sinkMethods=args.sinks,
                     mode=args.mode, outputFormat=args.format, emitGraph=args.emit_graph,
                     strict=args.strict, wrapperTypes=args.wrappers)

def _load_method(config):
    source = read_text(config.inputPath)
    try:
        method = parse_method(source, strict=config.strict)
    except SourceException as e:
        e.msg = "%s:%s" % (config.inputPath, e.msg)
        raise
    if config.methodName is not None and config.methodName != method.name:
        raise UnknownMethod(config.methodName, method.name)
    return method

def run(config, stdout=None):
    """Runs one slice or graph request; the payload goes to stdout, diagnostics to the slicekit logger"""
    if stdout is None:
        stdout = sys.stdout
    logger.debug("running %r", config)
    method = _load_method(config)
    graph = None
    if config.emitGraph or config.isGraphOnly():
        graph = build_graph(method, config.mode)
    if config.isGraphOnly():
        if config.outputFormat == FORMAT_JSON:
            stdout.write(to_json(graph, method))
        else:
            stdout.write(to_dot(graph, method))
        return EXIT_SUCCESS
    criterion = SliceCriterion(config.streamVariable, config.sinkMethods)
    result = compute_slice(method, criterion, config.mode, config.wrapperTypes)
    for warning in result.warnings:
        logger.warning("%s: %s", config.inputPath, warning)
    if config.outputFormat == FORMAT_JSON:
        stdout.write(slice_to_json(result, graph, method))
        return EXIT_SUCCESS
    stdout.write(result.renderedText)
    if graph is not None:
        stdout.write(to_dot(graph, method))
    return EXIT_SUCCESS

def run_corpus(directory, stdout=None, outputFormat=FORMAT_TEXT, mode=MODE_ALL_WRITERS):
    if stdout is None:
        stdout = sys.stdout
    results = corpus.check_corpus(directory, mode)
    if outputFormat == FORMAT_JSON:
        stdout.write(corpus.format_json_report(results))
    else:
        stdout.write(corpus.format_text_report(results))
    if all(result.passed() for result in results):
        return EXIT_SUCCESS
    return EXIT_MISMATCH

def main(argv=None, stdout=None, stderr=None):
    if argv is None:
        argv = sys.argv[1:]
    if stderr is None:
        stderr = sys.stderr
    enableLogging(logging.WARNING, stream=stderr)
    try:
        args = _build_argument_parser().parse_args(argv)
        level = logging.DEBUG if args.verbose else logging.WARNING
        if args.command == "corpus":
            enableLogging(level, stream=stderr)
            return run_corpus(args.directory, stdout, args.format, args.mode)
        config = _config_from_arguments(args)
        enableLogging(level, stream=stderr, color=config.colorEnabled)
        return run(config, stdout)
    except SlicekitException as e:
        logger.error("%s", e.msg)
        return e.exitCode
    except Exception:
        logger.error("internal error", exc_info=logger.isEnabledFor(logging.DEBUG))
        return EXIT_INTERNAL_ERROR
    finally:
        disableLogging()
