"""
Readers for the two graph input formats.

Edge list::

    # comment
    K L [bn=<index>]
    u v
    ...

DOT subset: an undirected ``graph [name] { ... }`` with ``a -- b`` chains,
bare node statements and a ``bn=true`` node attribute marking the base node.
"""
from pathlib import Path
import logging
import re

from .exceptions import ParseError
from .graph import Graph

logger = logging.getLogger(__name__)

_BN_TOKEN = re.compile(r'^bn=(-?\d+)$')
_DOT_HEADER = re.compile(r'^\s*(strict\s+)?(?P<kind>graph|digraph)\b\s*(?P<name>"[^"]*"|[\w.]+)?\s*\{?', re.IGNORECASE)
_DOT_ID = r'(?:"[^"]*"|[\w.]+)'
_DOT_ATTRS = re.compile(r'\[(?P<body>[^\]]*)\]\s*$')
_DOT_NODE = re.compile(rf'^(?P<id>{_DOT_ID})$')


def _strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_edge_list(text, name=''):
    lines = [
        (number, _strip_comment(raw))
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise ParseError("empty input, expected a 'K L [bn=<index>]' header", line=1)

    number, header = lines[0]
    tokens = header.split()
    if len(tokens) not in (2, 3):
        raise ParseError(f"expected 'K L [bn=<index>]', got {header!r}", line=number)
    try:
        vertex_count, branch_count = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"K and L must be integers, got {header!r}", line=number)
    base_node = None
    if len(tokens) == 3:
        match = _BN_TOKEN.match(tokens[2])
        if not match:
            raise ParseError(f"expected 'bn=<index>', got {tokens[2]!r}", line=number)
        base_node = int(match.group(1))

    edges = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex indices, got {line!r}", line=number)
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise ParseError(f"vertex indices must be integers, got {line!r}", line=number)

    if len(edges) != branch_count:
        raise ParseError(f"header declares {branch_count} branches, found {len(edges)}", line=lines[-1][0])
    return Graph(vertex_count, tuple(edges), base_node=base_node, name=name)


def _dot_id(token):
    token = token.strip()
    if token.startswith('"') and token.endswith('"'):
        return token[1:-1]
    return token


def _dot_statements(text):
    """Yield ``(line_number, statement)`` for every statement inside the braces."""
    header_seen = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = re.sub(r'//.*$', '', raw).strip()
        if line.startswith('#') or not line:
            continue
        if not header_seen:
            match = _DOT_HEADER.match(line)
            if not match:
                raise ParseError("expected 'graph [name] {'", line=number)
            if match.group('kind').lower() == 'digraph':
                raise ParseError("directed graphs are not supported", line=number)
            header_seen = True
            line = line[match.end():]
        for statement in line.replace('{', ';').replace('}', ';').split(';'):
            statement = statement.strip()
            if statement:
                yield number, statement
    if not header_seen:
        raise ParseError("empty input, expected 'graph [name] {'", line=1)


def parse_dot(text, name=''):
    index = {}
    labels = []
    edges = []
    base_node = None

    def vertex(token, number):
        label = _dot_id(token)
        if not re.fullmatch(_DOT_ID, token.strip()):
            raise ParseError(f"invalid node identifier {token.strip()!r}", line=number)
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for number, statement in _dot_statements(text):
        attrs = {}
        match = _DOT_ATTRS.search(statement)
        if match:
            for pair in re.split(r'[,;]', match.group('body')):
                if '=' in pair:
                    key, value = pair.split('=', 1)
                    attrs[key.strip().lower()] = _dot_id(value).lower()
            statement = statement[:match.start()].strip()
        if '->' in statement:
            raise ParseError("directed edges are not supported", line=number)
        if '=' in statement and '--' not in statement:
            # graph-level attribute such as rankdir=LR
            continue
        if statement.split()[0].lower() in ('node', 'edge', 'graph'):
            continue
        ends = [part for part in statement.split('--')]
        if any(not part.strip() for part in ends):
            raise ParseError(f"incomplete edge statement {statement!r}", line=number)
        vertices = [vertex(part, number) for part in ends]
        edges.extend(zip(vertices, vertices[1:]))
        if attrs.get('bn') == 'true':
            if len(vertices) != 1:
                raise ParseError("bn=true belongs on a node statement", line=number)
            if base_node is not None and base_node != vertices[0]:
                raise ParseError("more than one node is marked bn=true", line=number)
            base_node = vertices[0]

    return Graph(len(labels), tuple(edges), base_node=base_node, labels=tuple(labels), name=name)


def read_graph(path):
    """Read and validate a graph; ``.dot``/``.gv`` files use the DOT subset."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path.name} is not UTF-8 text (byte {exc.start})") from exc
    if path.suffix.lower() in ('.dot', '.gv') or text.lstrip().lower().startswith(('graph', 'strict', 'digraph')):
        graph = parse_dot(text, name=path.stem)
    else:
        graph = parse_edge_list(text, name=path.stem)
    logger.debug(f"Read {path}: K={graph.vertex_count} L={graph.branch_count} bn={graph.base_node}")
    return graph.full_clean()
