"""
Rendering of serialized reports as JSON, CSV or a fixed-width text table.
"""
import csv
import io

from rest_framework.renderers import JSONRenderer


def format_cell(value, places=9):
    if isinstance(value, float):
        return f"{value:.{places}f}"
    if isinstance(value, (list, tuple)):
        return ' '.join(str(item) for item in value)
    if value is None:
        return ''
    return str(value)


def render_json(data):
    """JSON with two-space indentation; field order is the serializer's."""
    content = JSONRenderer().render(data, renderer_context={'indent': 2})
    return content.decode('utf-8') + '\n'


def render_csv(header, rows, places=9):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value, places) for value in row])
    return stream.getvalue()


def render_table(header, rows, places=9):
    cells = [list(header)] + [[format_cell(value, places) for value in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'
