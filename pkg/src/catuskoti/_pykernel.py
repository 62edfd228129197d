"""Pure-Python twin of ``_ckernel``.

Valuations are processed in chunks of up to ``2**CHUNK_BITS`` indices; each
chunk is one Python integer whose bit ``t`` holds the value at index
``chunk_start + t``.
"""

CHUNK_BITS = 12

_OP_NOT = -1
_OP_AND = -2
_OP_OR = -3
_OP_IMPLIES = -4
_OP_XOR = -5


def _patterns(width_bits):
    width = 1 << width_bits
    out = []
    for p in range(width_bits):
        # bit t set iff bit p of t is set
        block = ((1 << (1 << p)) - 1) << (1 << p)
        period = 1 << (p + 1)
        word = 0
        for off in range(0, width, period):
            word |= block << off
        out.append(word)
    return out


_PATTERNS = _patterns(CHUNK_BITS)

_nodes = {}


def register_nodes(letter, negation, binary_opcodes):
    """Tell the compiler which node classes exist (avoids importing them here)."""
    _nodes.update(letter=letter, negation=negation, binary=dict(binary_opcodes))


def emit(f, index, code):
    """Append the postfix program of ``f`` to ``code``, numbering new letters."""
    letter, negation, binary = _nodes["letter"], _nodes["negation"], _nodes["binary"]
    append = code.append
    # iterative post-order walk; formulas may be deeper than the recursion limit
    stack = [f]
    pop, push = stack.pop, stack.append
    while stack:
        node = pop()
        kind = type(node)
        if kind is int:
            append(node)
        elif kind is letter:
            i = index.get(node.name)
            if i is None:
                i = index[node.name] = len(index)
            append(i)
        elif kind is negation:
            push(_OP_NOT)
            push(node.operand)
        elif kind in binary:
            push(binary[kind])
            push(node.right)
            push(node.left)
        else:
            raise TypeError(f"not a propositional formula: {node!r}")


def _run(code, n, base, width_bits, full):
    stack = []
    push = stack.append
    pop = stack.pop
    for op in code:
        if op >= 0:
            p = n - 1 - op
            if p < width_bits:
                push(_PATTERNS[p] & full)
            else:
                push(full if (base >> p) & 1 else 0)
        elif op == _OP_NOT:
            push(full ^ pop())
        else:
            b = pop()
            a = pop()
            if op == _OP_AND:
                push(a & b)
            elif op == _OP_OR:
                push(a | b)
            elif op == _OP_IMPLIES:
                push((full ^ a) | b)
            elif op == _OP_XOR:
                push(a ^ b)
            else:
                raise ValueError(f"bad opcode {op}")
    return stack[-1]


def _chunks(n):
    width_bits = min(n, CHUNK_BITS)
    full = (1 << (1 << width_bits)) - 1
    for base in range(0, 1 << n, 1 << width_bits):
        yield base, width_bits, full


def find_first(code, n, start=0):
    for base, width_bits, full in _chunks(n):
        end = base + (1 << width_bits)
        if end <= start:
            continue
        word = _run(code, n, base, width_bits, full)
        if start > base:
            word &= ~((1 << (start - base)) - 1)
        if word:
            return base + (word & -word).bit_length() - 1
    return -1


def count_true(code, n):
    return sum(_run(code, n, base, w, full).bit_count() for base, w, full in _chunks(n))


def truth_column(code, n):
    out = bytearray()
    for base, width_bits, full in _chunks(n):
        word = _run(code, n, base, width_bits, full)
        bits = bin(word)[2:].zfill(1 << width_bits)
        out.extend(int(c) for c in reversed(bits))
    return bytes(out)
