import itertools
import os
import random
import shlex
import shutil
import sys
import tempfile

from infi.execute import execute

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CORPUS_DIRECTORY = os.path.join(PROJECT_ROOT, "corpus")

LOOP_METHOD = """void m(int i, int sum) {
    while (i <= 10) {
        sum = sum + 1;
        ++i;
    }
}
"""

_filename_gen = (os.path.join(tempfile.gettempdir(), "slicekit___%s_%s" % (os.getpid(), i))
                 for i in itertools.count())

def get_temporary_location():
    for path in _filename_gen:
        if not os.path.exists(path):
            return os.path.realpath(path)

def create_directory():
    returned = get_temporary_location()
    os.mkdir(returned)
    return returned

def delete_directory(path):
    shutil.rmtree(path)

def write_file(directory, filename, contents):
    full_filename = os.path.join(directory, filename)
    with open(full_filename, "w") as f:
        f.write(contents)
    return full_filename

def copy_corpus():
    returned = get_temporary_location()
    shutil.copytree(CORPUS_DIRECTORY, returned)
    return returned

def get_corpus_programs():
    return sorted(filename for filename in os.listdir(CORPUS_DIRECTORY) if filename.endswith(".mj"))

def read_corpus_file(filename):
    with open(os.path.join(CORPUS_DIRECTORY, filename)) as f:
        return f.read()

def run_slicekit(*args, **kwargs):
    """Runs the command line tool in a child process; returns (exit code, stdout, stderr)"""
    env = kwargs.pop("env", None)
    command = " ".join(shlex.quote(arg) for arg in [sys.executable, "-m", "slicekit"] + list(args))
    if env:
        command = " ".join("%s=%s" % (name, shlex.quote(value)) for name, value in sorted(env.items())) + " " + command
    result = execute(command, shell=True, cwd=PROJECT_ROOT)
    result.wait()
    return (result.get_returncode(),
            result.get_stdout().decode("UTF-8"),
            result.get_stderr().decode("UTF-8"))

############################### program generator ##############################
_VARIABLES = ("x", "y", "z", "w")
_PARAMETERS = ("a", "b")

class GeneratedProgram(object):
    def __init__(self, source, accesses):
        super(GeneratedProgram, self).__init__()
        self.source = source
        # (reads, writes) per statement in textual order, prototype first
        self.accesses = accesses
    def __len__(self):
        return len(self.accesses)

class ProgramGenerator(object):
    """Random straight-line and loop programs built together with their expected read/write sets"""
    def __init__(self, seed, max_statements=12):
        super(ProgramGenerator, self).__init__()
        self.random = random.Random(seed)
        self.budget = self.random.randint(1, max_statements)
        self.lines = []
        self.accesses = [(set(), set(_PARAMETERS))]
    def generate(self):
        self.lines.append("void generated(int a, int b) {")
        self._generateBlock(1)
        self.lines.append("}")
        return GeneratedProgram("\n".join(self.lines) + "\n", self.accesses)
    def _variable(self, pool=_VARIABLES + _PARAMETERS):
        return self.random.choice(pool)
    def _emit(self, level, text, reads, writes):
        self.lines.append("    " * level + text)
        self.accesses.append((set(reads), set(writes)))
        self.budget -= 1
    def _generateBlock(self, level):
        while self.budget > 0:
            choice = self.random.random()
            if choice < 0.15 and level < 3 and self.budget > 1:
                self._generateControl(level)
            else:
                self._generateSimple(level)
            if level > 1 and self.random.random() < 0.3:
                return
    def _generateSimple(self, level):
        target = self._variable(_VARIABLES)
        source = self._variable()
        kind = self.random.randint(0, 4)
        if kind == 0:
            self._emit(level, "%s = %s + 1;" % (target, source), [source], [target])
        elif kind == 1:
            self._emit(level, "%s += %s;" % (target, source), [target, source], [target])
        elif kind == 2:
            self._emit(level, "++%s;" % (target,), [target], [target])
        elif kind == 3:
            self._emit(level, "%s--;" % (target,), [target], [target])
        else:
            self._emit(level, "out.print(%s);" % (source,), ["out", source], [])
    def _generateControl(self, level):
        left, right = self._variable(), self._variable()
        keyword = self.random.choice(("while", "if"))
        self._emit(level, "%s (%s < %s) {" % (keyword, left, right), [left, right], [])
        self._generateBlock(level + 1)
        self.lines.append("    " * level + "}")

def generate_program(seed, max_statements=12):
    return ProgramGenerator(seed, max_statements).generate()

def random_graph_edges(rng, node_count, density):
    edges = set()
    for src in range(node_count):
        for dst in range(node_count):
            if src == dst:
                continue
            for kind in ("control", "data"):
                if rng.random() < density:
                    edges.add((src, dst, kind))
    return edges

#################################### oracles ###################################
def brute_force_data_edges(accesses):
    returned = set()
    for i, (_, writes) in enumerate(accesses):
        for j, (reads, _) in enumerate(accesses):
            if i < j and writes & reads:
                returned.add((i, j))
    return returned

def _enumerate_traces(method, child_ids):
    traces = [[]]
    for child_id in child_ids:
        node = method.statements[child_id]
        if node.isLoop():
            options = [[child_id]] + [[child_id] + trace for trace in _enumerate_traces(method, node.children)]
        elif node.isControl():
            options = [[child_id] + trace
                       for branch in (node.getThenChildren(), node.getElseChildren())
                       for trace in _enumerate_traces(method, branch)]
        else:
            options = [[child_id]]
        traces = [trace + option for trace in traces for option in options]
    return traces

def trace_data_edges(method):
    """Writer-to-reader pairs seen on some execution trace running each loop body zero times or once"""
    returned = set()
    for trace in _enumerate_traces(method, method.prototype.children):
        last_writer = {}
        for node_id in [0] + trace:
            node = method.statements[node_id]
            for variable in node.reads:
                if variable in last_writer:
                    returned.add((last_writer[variable], node_id))
            for variable in node.writes:
                last_writer[variable] = node_id
    return returned

def matrix_closure(node_count, edges):
    """Boolean adjacency matrix squared until it stops changing"""
    matrix = [[False] * node_count for _ in range(node_count)]
    for src, dst in edges:
        matrix[src][dst] = True
    while True:
        squared = [[matrix[i][j] or any(matrix[i][k] and matrix[k][j] for k in range(node_count))
                    for j in range(node_count)]
                   for i in range(node_count)]
        if squared == matrix:
            return matrix
        matrix = squared

def enumerate_path_nodes(successors, start):
    """Every node ending some simple directed path from start, found by depth first path enumeration"""
    returned = set([start])
    def visit(node, path):
        for successor in successors.get(node, ()):
            if successor in path:
                continue
            returned.add(successor)
            visit(successor, path | set([successor]))
    visit(start, set([start]))
    return returned
