#! /usr/bin/python
import re
import unittest
from utils import LOOP_METHOD
from utils import get_corpus_programs
from utils import read_corpus_file
from slicekit import statement as stmt
from slicekit.parser import parse_method
from slicekit.parser import MAX_NESTING_DEPTH
from slicekit.parser import extract_reads_writes
from slicekit.slicer import format_method
from slicekit.exceptions import DuplicateDeclaration
from slicekit.exceptions import NestingTooDeep
from slicekit.exceptions import ParseError
from slicekit.exceptions import UndeclaredVariable

TEN_STATEMENTS = """void ten(Writer out, int n) {
    int a = n;
    int b = a + 1;
    if (a > b) {
        b = a;
    } else {
        a = b;
    }
    while (b < 10) {
        b++;
    }
    n = a + b;
    out.print(a);
    return;
}
"""

def count_statements(source):
    """Independent of the parser: one per ';' outside for headers, one per control keyword, one prototype"""
    without_for_headers = re.sub(r"for\s*\([^)]*\)", "for", source)
    return 1 + without_for_headers.count(";") + len(re.findall(r"\b(?:if|while|for)\b", without_for_headers))

class ParsingTest(unittest.TestCase):
    def testOneStatement(self):
        method = parse_method("void m() { x = y; }")
        self.assertEqual(len(method), 2)
        self.assertEqual(method.getStatement(0).kind, stmt.PROTOTYPE)
        self.assertEqual(method.getStatement(0).text, "void m()")
        self.assertEqual(method.getStatement(1).kind, stmt.ASSIGNMENT)
        self.assertEqual(method.getStatement(1).text, "x = y;")
        self.assertEqual(method.name, "m")
    def testLoopChildren(self):
        method = parse_method(LOOP_METHOD)
        self.assertEqual(len(method), 4)
        self.assertEqual(method.getStatement(1).kind, stmt.WHILE)
        self.assertEqual(method.getStatement(1).children, [2, 3])
        self.assertEqual(method.getStatement(1).text, "while (i <= 10)")
        self.assertEqual(method.getStatement(0).children, [1])
        self.assertEqual(method.parameters, [("i", "int"), ("sum", "int")])
    def testNodeCountMatchesIndependentScanner(self):
        method = parse_method(TEN_STATEMENTS)
        self.assertEqual(len(method), 11)
        self.assertEqual(count_statements(TEN_STATEMENTS), 11)
        for filename in get_corpus_programs():
            source = read_corpus_file(filename)
            self.assertEqual(len(parse_method(source)), count_statements(source), filename)
    def testIdsAreDenseAndInTextualOrder(self):
        method = parse_method(TEN_STATEMENTS)
        self.assertEqual([node.id for node in method], list(range(11)))
        positions = [node.position for node in method]
        self.assertEqual(positions, sorted(positions))
        for node in method:
            for child in node.children:
                self.assertGreater(child, node.id)
                self.assertEqual(method.getStatement(child).parent, node.id)
    def testElseBranchBelongsToIf(self):
        method = parse_method(TEN_STATEMENTS)
        node = method.getStatement(3)
        self.assertEqual(node.kind, stmt.IF)
        self.assertEqual(node.children, [4, 5])
        self.assertEqual(node.getThenChildren(), [4])
        self.assertEqual(node.getElseChildren(), [5])
    def testBlocksAreFlattened(self):
        method = parse_method("void m(int a) { { int b = a; { b = b + 1; } } if (a > 0) { { a = 1; } } }")
        self.assertEqual([node.kind for node in method],
                         [stmt.PROTOTYPE, stmt.DECLARATION, stmt.ASSIGNMENT, stmt.IF, stmt.ASSIGNMENT])
        self.assertEqual(method.getStatement(0).children, [1, 2, 3])
        self.assertEqual(method.getStatement(3).children, [4])
    def testBodyWithoutBraces(self):
        method = parse_method("void m(int a) { if (a > 0) a = 0; else a = 1; while (a < 3) a++; }")
        self.assertEqual(method.getStatement(1).children, [2, 3])
        self.assertEqual(method.getStatement(1).elseIndex, 1)
        self.assertEqual(method.getStatement(4).children, [5])
    def testElseIf(self):
        method = parse_method("void m(int a) { if (a > 0) { a = 0; } else if (a < 0) { a = 1; } }")
        self.assertEqual(method.getStatement(1).children, [2, 3])
        self.assertEqual(method.getStatement(3).kind, stmt.IF)
        self.assertEqual(method.getStatement(3).children, [4])
    def testStatementKinds(self):
        method = parse_method("""public static int m(Writer out, int a) {
            int b;
            b = a;
            out.print(b);
            a + b;
            for (int k = 0; k < a; k++) { }
            return b;
        }""")
        self.assertEqual([node.kind for node in method],
                         [stmt.PROTOTYPE, stmt.DECLARATION, stmt.ASSIGNMENT, stmt.INVOCATION,
                          stmt.EXPRESSION_STATEMENT, stmt.FOR, stmt.RETURN])
        self.assertEqual(method.returnType, "int")
        self.assertEqual(method.getStatement(0).text, "public static int m(Writer out, int a)")
        self.assertEqual(method.getStatement(5).text, "for (int k = 0; k < a; k++)")
    def testInvocationFields(self):
        method = parse_method("""void m(Writer out, String s) {
            out.print(s);
            System.err.println(s);
            out.append(s).append("!");
            helper(s);
        }""")
        calls = [(node.receiver, node.calledMethod) for node in method.statements[1:]]
        self.assertEqual(calls, [("out", "print"), ("System.err", "println"), ("out", "append"), (None, "helper")])
        self.assertEqual(method.getStatement(2).reads, frozenset(["s"]))
    def testWrapperFields(self):
        method = parse_method("""void m(Writer out) {
            PrintWriter w = new PrintWriter(new BufferedWriter(out));
            Writer v;
            v = w;
            Writer u = new PrintWriter(out, true);
        }""")
        wrapped = method.getStatement(1)
        self.assertEqual(wrapped.target, "w")
        self.assertEqual(wrapped.constructedWrapperOf, "out")
        self.assertEqual(wrapped.constructedTypes, ("PrintWriter", "BufferedWriter"))
        self.assertEqual(method.getStatement(3).copyOf, "w")
        self.assertEqual(method.getStatement(3).target, "v")
        self.assertEqual(method.getStatement(4).constructedWrapperOf, "out")
        self.assertIsNone(method.getStatement(2).target)
    def testComments(self):
        method = parse_method("void m() {\n    // leading\n    x = 1; /* trailing */\n}\n")
        self.assertEqual(method.getStatement(1).text, "x = 1;")
        self.assertEqual(method.getStatement(1).position, (3, 5))

class ImplicitNamesTest(unittest.TestCase):
    def testLenientParsingRecordsImplicitNames(self):
        method = parse_method("void m() { x = 1; x = 2; y = x; }")
        self.assertEqual(method.implicitNames, frozenset(["x", "y"]))
        self.assertFalse(method.getStatement(0).writes)
    def testStrictParsingRejectsUndeclared(self):
        with self.assertRaises(UndeclaredVariable) as caught:
            parse_method("void m(int a) {\n    b = a;\n}", strict=True)
        self.assertEqual((caught.exception.line, caught.exception.column), (2, 5))
        self.assertEqual(caught.exception.name, "b")
    def testStrictParsingAcceptsDeclared(self):
        method = parse_method("void m(int a) { int b = a; b++; }", strict=True)
        self.assertEqual(method.implicitNames, frozenset())
    def testOutOfScopeIsUndeclared(self):
        with self.assertRaises(UndeclaredVariable):
            parse_method("void m(int a) { if (a > 0) { int b = a; } a = b; }", strict=True)
    def testClassReferencesAreNotVariables(self):
        method = parse_method("void m(int i) { System.err.println(i); int j = Math.max(i, 2); }", strict=True)
        self.assertEqual(method.getStatement(1).reads, frozenset(["i"]))
        self.assertEqual(method.getStatement(2).reads, frozenset(["i"]))

class ParseErrorTest(unittest.TestCase):
    def testMissingSemicolon(self):
        with self.assertRaises(ParseError) as caught:
            parse_method("void m() {\n    x = y\n}")
        self.assertEqual((caught.exception.line, caught.exception.column), (3, 1))
        self.assertIn(";", caught.exception.expected)
    def testTrailingInput(self):
        with self.assertRaises(ParseError) as caught:
            parse_method("void m() { } void n() { }")
        self.assertEqual(caught.exception.expected, ["end of input"])
    def testUnclosedBody(self):
        with self.assertRaises(ParseError):
            parse_method("void m() { x = 1;")
    def testEmptySource(self):
        with self.assertRaises(ParseError):
            parse_method("")
    def testAssignmentToNonVariable(self):
        with self.assertRaises(ParseError):
            parse_method("void m() { f() = 1; }")
    def testDanglingElse(self):
        with self.assertRaises(ParseError):
            parse_method("void m() { else { } }")
    def testDuplicateDeclaration(self):
        with self.assertRaises(DuplicateDeclaration) as caught:
            parse_method("void m() { int a = 1; int a = 2; }")
        self.assertEqual(caught.exception.name, "a")
    def testParameterRedeclared(self):
        with self.assertRaises(DuplicateDeclaration):
            parse_method("void m(int a) { if (a > 0) { int a = 2; } }")
    def testSiblingScopesMayReuseNames(self):
        method = parse_method("void m(int a) { if (a > 0) { int t = 1; } else { int t = 2; } }", strict=True)
        self.assertEqual(len(method), 4)

def nested_ifs(levels):
    return "void m(int a) { " + "if (a > 0) { " * levels + "a = 1; " + "} " * levels + "}"

class NestingTest(unittest.TestCase):
    def testDeeplyNestedStatements(self):
        with self.assertRaises(NestingTooDeep) as caught:
            parse_method(nested_ifs(300))
        self.assertEqual(caught.exception.limit, MAX_NESTING_DEPTH)
        self.assertEqual(caught.exception.line, 1)
        self.assertIn("nested deeper than", caught.exception.msg)
    def testDeeplyNestedParentheses(self):
        with self.assertRaises(NestingTooDeep):
            parse_method("void m(int a) { a = " + "(" * 300 + "a" + ")" * 300 + "; }")
    def testLongPrefixOperatorRun(self):
        with self.assertRaises(NestingTooDeep):
            parse_method("void m(boolean a) { a = " + "!" * 2000 + "a; }")
    def testNestingTooDeepIsAParseError(self):
        self.assertRaises(ParseError, parse_method, nested_ifs(MAX_NESTING_DEPTH + 1))
    def testModerateNestingIsAccepted(self):
        method = parse_method(nested_ifs(30))
        self.assertEqual(len(method), 32)
        self.assertEqual(method.getStatement(31).parent, 30)
        method = parse_method("void m(int a) { a = " + "(" * 40 + "a + 1" + ")" * 40 + "; }")
        self.assertEqual(extract_reads_writes(method.getStatement(1)), (set(["a"]), set(["a"])))
    def testLongOperatorChain(self):
        method = parse_method("void m(int a) { int x = " + " + ".join(["a"] * 3000) + "; }")
        self.assertEqual(extract_reads_writes(method.getStatement(1)), (set(["a"]), set(["x"])))
    def testLongFieldChain(self):
        method = parse_method("void m(Writer out) { out" + ".f" * 3000 + ".print(1); }")
        self.assertEqual(method.getStatement(1).receiver, "out" + ".f" * 3000)

class ReadsWritesTest(unittest.TestCase):
    def assertAccesses(self, body, node_id, reads, writes, params="int x, int y, int z, int i, int sum"):
        method = parse_method("void m(%s) { %s }" % (params, body))
        node = method.getStatement(node_id)
        self.assertEqual(extract_reads_writes(node), (set(reads), set(writes)))
        self.assertEqual((node.reads, node.writes), (frozenset(reads), frozenset(writes)))
    def testCopy(self):
        self.assertAccesses("z=x;", 1, ["x"], ["z"])
    def testPrefixIncrement(self):
        self.assertAccesses("++i;", 1, ["i"], ["i"])
    def testWhileHeaderOnly(self):
        self.assertAccesses("while (i <= 10) { sum = sum + 1; }", 1, ["i"], [])
    def testSelfUpdate(self):
        self.assertAccesses("sum = sum + 1;", 1, ["sum"], ["sum"])
    def testCompoundAssignment(self):
        self.assertAccesses("sum += x * y;", 1, ["sum", "x", "y"], ["sum"])
    def testDeclarationWithoutInitializerWritesNothing(self):
        self.assertAccesses("int k;", 1, [], [])
    def testDeclarationInitializer(self):
        self.assertAccesses("int k = x + y;", 1, ["x", "y"], ["k"])
    def testInvocationReadsReceiverAndArguments(self):
        self.assertAccesses("out.print(x + \"<br>\" + y);", 1, ["out", "x", "y"], [], params="Writer out, int x, int y")
    def testInvocationResultAssigned(self):
        self.assertAccesses("z = helper(x, y);", 1, ["x", "y"], ["z"])
    def testIncrementInsideExpression(self):
        self.assertAccesses("z = x++ + y;", 1, ["x", "y"], ["x", "z"])
    def testForHeader(self):
        self.assertAccesses("for (int k = x; k < y; k++) { }", 1, ["x", "k", "y"], ["k"])
    def testIfElseHeaderOnly(self):
        self.assertAccesses("if (x == y) { z = 1; } else { z = 2; }", 1, ["x", "y"], [])
    def testReturn(self):
        self.assertAccesses("return x - y;", 1, ["x", "y"], [])
    def testPrototypeWritesParameters(self):
        self.assertAccesses("", 0, [], ["x", "y"], params="int x, String y")
    def testConstructionReadsArguments(self):
        self.assertAccesses("PrintWriter w = new PrintWriter(out);", 1, ["out"], ["w"], params="Writer out")

class FormattingTest(unittest.TestCase):
    def testCanonicalSourceIsReproduced(self):
        self.assertEqual(format_method(parse_method(LOOP_METHOD)), LOOP_METHOD)
        self.assertEqual(format_method(parse_method(TEN_STATEMENTS)), TEN_STATEMENTS)
        for filename in get_corpus_programs():
            source = read_corpus_file(filename)
            self.assertEqual(format_method(parse_method(source)), source, filename)
    def testWhitespaceIsNormalized(self):
        method = parse_method("void m(int a)\n{\nif (a > 0)\n  a = 1;\n}")
        self.assertEqual(format_method(method), "void m(int a) {\n    if (a > 0) {\n        a = 1;\n    }\n}\n")
    def testEmptyBody(self):
        self.assertEqual(format_method(parse_method("void m() {}")), "void m() {\n}\n")

if __name__ == '__main__':
    unittest.main()
