# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-parallel truth-table scanner; mirrors ``_pykernel``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef int OP_NOT = -1
cdef int OP_AND = -2
cdef int OP_OR = -3
cdef int OP_IMPLIES = -4
cdef int OP_XOR = -5

# bit t of PATTERN[p] is bit p of t, for t in 0..63
cdef uint64_t PATTERN[6]
PATTERN[0] = 0xAAAAAAAAAAAAAAAAULL
PATTERN[1] = 0xCCCCCCCCCCCCCCCCULL
PATTERN[2] = 0xF0F0F0F0F0F0F0F0ULL
PATTERN[3] = 0xFF00FF00FF00FF00ULL
PATTERN[4] = 0xFFFF0000FFFF0000ULL
PATTERN[5] = 0xFFFFFFFF00000000ULL


cdef object _letter = None
cdef object _negation = None
cdef dict _binary = {}


def register_nodes(letter, negation, binary_opcodes):
    global _letter, _negation, _binary
    _letter = letter
    _negation = negation
    _binary = dict(binary_opcodes)


def emit(f, dict index, code):
    """Append the postfix program of ``f`` to ``code``, numbering new letters."""
    cdef list stack = [f]
    cdef list out = []
    cdef object node, kind, i
    while stack:
        node = stack.pop()
        kind = type(node)
        if kind is int:
            out.append(node)
        elif kind is _letter:
            i = index.get(node.name)
            if i is None:
                i = len(index)
                index[node.name] = i
            out.append(i)
        elif kind is _negation:
            stack.append(OP_NOT)
            stack.append(node.operand)
        else:
            i = _binary.get(kind)
            if i is None:
                raise TypeError(f"not a propositional formula: {node!r}")
            stack.append(i)
            stack.append(node.right)
            stack.append(node.left)
    code.extend(out)


cdef inline uint64_t run_block(const int* code, Py_ssize_t length, int n,
                               int64_t base, uint64_t full, uint64_t* stack) noexcept nogil:
    cdef Py_ssize_t k
    cdef int op, p
    cdef Py_ssize_t top = 0
    cdef uint64_t a, b
    for k in range(length):
        op = code[k]
        if op >= 0:
            p = n - 1 - op
            if p < 6:
                stack[top] = PATTERN[p] & full
            elif (base >> p) & 1:
                stack[top] = full
            else:
                stack[top] = 0
            top += 1
        elif op == OP_NOT:
            stack[top - 1] = full ^ stack[top - 1]
        else:
            top -= 1
            b = stack[top]
            a = stack[top - 1]
            if op == OP_AND:
                stack[top - 1] = a & b
            elif op == OP_OR:
                stack[top - 1] = a | b
            elif op == OP_IMPLIES:
                stack[top - 1] = (full ^ a) | b
            else:
                stack[top - 1] = a ^ b
    return stack[top - 1]


cdef inline int ctz64(uint64_t x) noexcept nogil:
    cdef int r = 0
    while not (x & 1):
        x >>= 1
        r += 1
    return r


cdef uint64_t* _stack_for(Py_ssize_t length) except NULL:
    cdef uint64_t* stack = <uint64_t*> malloc((length + 1) * sizeof(uint64_t))
    if stack == NULL:
        raise MemoryError()
    return stack


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 6:
        return 0xFFFFFFFFFFFFFFFFULL
    return ((<uint64_t> 1) << (1 << n)) - 1


def find_first(const int[:] code, int n, int64_t start=0):
    cdef Py_ssize_t length = code.shape[0]
    cdef int64_t total = (<int64_t> 1) << n
    cdef uint64_t full = _full(n)
    cdef int64_t base
    cdef uint64_t word
    cdef int64_t result = -1
    if start >= total:
        return -1
    cdef uint64_t* stack = _stack_for(length)
    try:
        with nogil:
            base = start - (start % 64)
            while base < total:
                word = run_block(&code[0], length, n, base, full, stack)
                if start > base:
                    word &= ~(((<uint64_t> 1) << (start - base)) - 1)
                if word:
                    result = base + ctz64(word)
                    break
                base += 64
    finally:
        free(stack)
    return result


def count_true(const int[:] code, int n):
    cdef Py_ssize_t length = code.shape[0]
    cdef int64_t total = (<int64_t> 1) << n
    cdef uint64_t full = _full(n)
    cdef int64_t base = 0
    cdef int64_t count = 0
    cdef uint64_t word
    cdef uint64_t* stack = _stack_for(length)
    try:
        with nogil:
            while base < total:
                word = run_block(&code[0], length, n, base, full, stack)
                while word:
                    word &= word - 1
                    count += 1
                base += 64
    finally:
        free(stack)
    return count


def truth_column(const int[:] code, int n):
    cdef Py_ssize_t length = code.shape[0]
    cdef int64_t total = (<int64_t> 1) << n
    cdef uint64_t full = _full(n)
    cdef int64_t base = 0
    cdef int64_t t, limit
    cdef uint64_t word
    out = bytearray(total)
    cdef unsigned char[:] view = out
    cdef uint64_t* stack = _stack_for(length)
    try:
        with nogil:
            while base < total:
                word = run_block(&code[0], length, n, base, full, stack)
                limit = 64 if total - base > 64 else total - base
                for t in range(limit):
                    view[base + t] = (word >> t) & 1
                base += 64
    finally:
        free(stack)
    return bytes(out)
