# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import math
import re
from fractions import Fraction

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import X, SX, RZ, CX, BARRIER, MEASURE, NATIVE_KINDS, x, sx, rz, cx, \
    barrier, measure
from zneqv.errors import CircuitError, QasmParseError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_QREG = "q"
_CREG = "c"
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPERAND = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\[(\d+)\])?$")
_PI_TERM = re.compile(r"^(-)?(?:(\d+)\*)?pi(?:/(\d+))?$")
_ONE_QUBIT = {"x": x, "sx": sx}


def format_angle(angle):
    """
    Prints an angle for QASM output. Exact multiples of pi/4 are written symbolically, everything
    else with 17 significant digits.
    """
    quarter = round(angle / (math.pi / 4))
    if quarter != 0 and abs(quarter) <= 64 and quarter * math.pi / 4 == angle:
        frac = Fraction(quarter, 4)
        num, den = frac.numerator, frac.denominator
        sign = "-" if num < 0 else ""
        num = abs(num)
        text = sign + ("pi" if num == 1 else "%d*pi" % num)
        return text if den == 1 else "%s/%d" % (text, den)
    if angle == 0:
        return "0"
    return "%.17g" % angle


def parse_angle(text, line=None, column=None):
    text = text.replace(" ", "")
    match = _PI_TERM.match(text)
    if match:
        sign, num, den = match.groups()
        num = int(num) if num else 1
        den = int(den) if den else 1
        if den == 0:
            raise QasmParseError("Division by zero in angle '%s'" % text, line, column)
        # matches format_angle for exact multiples of pi/4
        quarter = Fraction(num, den) * 4
        if quarter.denominator == 1:
            value = int(quarter) * math.pi / 4
        else:
            value = num * math.pi / den
        return -value if sign else value
    try:
        value = float(text)
    except ValueError:
        raise QasmParseError("Malformed angle '%s'" % text, line, column)
    if not math.isfinite(value):
        raise QasmParseError("Angle '%s' is not finite" % text, line, column)
    return value


def qasm_export(circuit):
    """
    Writes a native circuit as an OpenQASM 2.0 document. The output is byte-stable for a given
    circuit.

    :param circuit: circuit containing only X, SX, RZ, CX, barriers and measurements
    :type circuit: Circuit
    :return: the QASM document
    :rtype: str

    :Example:
        >>> qasm_export(Circuit(1, [rz(math.pi / 2, 0)]))
        'OPENQASM 2.0;\\ninclude "qelib1.inc";\\nqreg q[1];\\nrz(pi/2) q[0];\\n'
    """
    lines = [QASM_HEADER.rstrip("\n"), "qreg %s[%d];" % (_QREG, circuit.n_qubits)]
    meas = circuit.measurements()
    if meas:
        n_clbits = max(circuit.n_qubits, max(g.clbit for g in meas) + 1)
        lines.append("creg %s[%d];" % (_CREG, n_clbits))
    for g in circuit.gates:
        if g.kind not in NATIVE_KINDS:
            raise CircuitError("%s gates on %s must be decomposed before QASM export"
                               % (g.kind, g.qubits))
        operands = ",".join("%s[%d]" % (_QREG, q) for q in g.qubits)
        if g.kind == RZ:
            lines.append("rz(%s) %s;" % (format_angle(g.angle), operands))
        elif g.kind == MEASURE:
            lines.append("measure %s -> %s[%d];" % (operands, _CREG, g.clbit))
        else:
            lines.append("%s %s;" % (g.kind.lower(), operands))
    return "\n".join(lines) + "\n"


def _statements(text):
    """
    Yields (statement, line, column) triples. Statements end with ';', comments start with '//'.
    """
    buffer, start = "", None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0]
        col = 0
        for piece in line.split(";")[:-1]:
            if start is None:
                start = (line_no, col + len(piece) - len(piece.lstrip()) + 1)
            buffer += piece
            yield buffer.strip(), start[0], start[1]
            col += len(piece) + 1
            buffer, start = "", None
        rest = line.split(";")[-1]
        if rest.strip():
            if start is None:
                start = (line_no, col + len(rest) - len(rest.lstrip()) + 1)
            buffer += rest + " "
    if buffer.strip():
        raise QasmParseError("Missing ';' after '%s'" % buffer.strip(), start[0], start[1])


class _Registers:

    def __init__(self):
        self.qreg = None
        self.creg = None

    def declare(self, kind, name, size, line, col):
        if size < 1:
            raise QasmParseError("Register %s needs a positive size" % name, line, col)
        if kind == "qreg":
            if self.qreg is not None:
                raise QasmParseError("Only one qreg is supported", line, col)
            self.qreg = (name, size)
        else:
            if self.creg is not None:
                raise QasmParseError("Only one creg is supported", line, col)
            self.creg = (name, size)

    def _resolve(self, reg, token, line, col, allow_whole):
        if reg is None:
            raise QasmParseError("Register used before declaration: '%s'" % token, line, col)
        match = _OPERAND.match(token)
        if not match or match.group(1) != reg[0]:
            raise QasmParseError("Unknown register operand '%s'" % token, line, col)
        if match.group(2) is None:
            if not allow_whole:
                raise QasmParseError("Operand '%s' needs an index" % token, line, col)
            return list(range(reg[1]))
        index = int(match.group(2))
        if index >= reg[1]:
            raise QasmParseError("Index %d out of range for %s[%d]" % (index, reg[0], reg[1]),
                                 line, col)
        return [index]

    def qubits(self, token, line, col, allow_whole=False):
        return self._resolve(self.qreg, token, line, col, allow_whole)

    def clbits(self, token, line, col):
        return self._resolve(self.creg, token, line, col, False)


def qasm_import(text):
    """
    Reads an OpenQASM 2.0 document restricted to one qreg, one creg and the gates x, sx, rz, cx,
    id, barrier and measure. ``id`` gates are dropped.

    :param text: the QASM document
    :type text: str
    :return: the parsed circuit (without layer marks)
    :rtype: Circuit
    """
    regs = _Registers()
    gates = []
    seen_header = False
    for stmt, line, col in _statements(text):
        if not stmt:
            continue
        head = _IDENT.match(stmt)
        if head is None:
            raise QasmParseError("Unexpected statement '%s'" % stmt, line, col)
        word = head.group(0)
        rest = stmt[head.end():].strip()
        if word == "OPENQASM":
            if rest != "2.0":
                raise QasmParseError("Only OPENQASM 2.0 is supported, got '%s'" % rest, line, col)
            seen_header = True
            continue
        if word == "include":
            continue
        if word in ("qreg", "creg"):
            match = _OPERAND.match(rest)
            if not match or match.group(2) is None:
                raise QasmParseError("Malformed register declaration '%s'" % stmt, line, col)
            regs.declare(word, match.group(1), int(match.group(2)), line, col)
            continue
        params = None
        if rest.startswith("("):
            close = rest.find(")")
            if close < 0:
                raise QasmParseError("Unbalanced parenthesis in '%s'" % stmt, line, col)
            params = rest[1:close]
            rest = rest[close + 1:].strip()
        arg_col = col + len(stmt) - len(rest)
        if word == "measure":
            parts = [p.strip() for p in rest.split("->")]
            if len(parts) != 2:
                raise QasmParseError("Malformed measurement '%s'" % stmt, line, col)
            (q,) = regs.qubits(parts[0], line, arg_col)
            (c,) = regs.clbits(parts[1], line, arg_col)
            gates.append(measure(q, c))
            continue
        operands = [p.strip() for p in rest.split(",")] if rest else []
        if word == "barrier":
            qubits = []
            for op in operands:
                qubits.extend(regs.qubits(op, line, arg_col, allow_whole=True))
            if not qubits:
                raise QasmParseError("Barrier without operands", line, col)
            gates.append(barrier(*qubits))
            continue
        if word in ("x", "sx", "id", "rz"):
            if len(operands) != 1:
                raise QasmParseError("'%s' takes one qubit operand" % word, line, arg_col)
            (q,) = regs.qubits(operands[0], line, arg_col)
            if word == "rz":
                if params is None:
                    raise QasmParseError("'rz' needs an angle", line, col)
                gates.append(rz(parse_angle(params, line, col + len(word) + 1), q))
            elif word != "id":
                gates.append(_ONE_QUBIT[word](q))
            continue
        if word == "cx":
            if len(operands) != 2:
                raise QasmParseError("'cx' takes two qubit operands", line, arg_col)
            (c,) = regs.qubits(operands[0], line, arg_col)
            (t,) = regs.qubits(operands[1], line, arg_col)
            if c == t:
                raise QasmParseError("'cx' control and target coincide", line, arg_col)
            gates.append(cx(c, t))
            continue
        raise QasmParseError("Unknown gate '%s'" % word, line, col)
    if not seen_header:
        logger.warning("QASM document without 'OPENQASM 2.0;' header")
    if regs.qreg is None:
        raise QasmParseError("No qreg declared")
    try:
        return Circuit(regs.qreg[1], gates)
    except CircuitError as e:
        raise QasmParseError(str(e))
