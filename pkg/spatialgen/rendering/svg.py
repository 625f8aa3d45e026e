"""
Constructor mínimo de documentos SVG
Salida textual estable: atributos en orden fijo y números con formato fijo
"""
from xml.sax.saxutils import escape


def _num(value):
    return f'{value:.2f}'


class SvgBuilder:
    def __init__(self, width, height, background='#ffffff'):
        self.width = width
        self.height = height
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="{background}"/>',
        ]

    def line(self, x1, y1, x2, y2, stroke, width=1):
        self.parts.append(
            f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
            f'stroke="{stroke}" stroke-width="{width}"/>'
        )

    def rect(self, x, y, width, height, fill, css_class=None):
        extra = f' class="{css_class}"' if css_class else ''
        self.parts.append(
            f'<rect{extra} x="{_num(x)}" y="{_num(y)}" width="{_num(width)}" '
            f'height="{_num(height)}" fill="{fill}"/>'
        )

    def circle(self, cx, cy, r, fill, css_class='marker', data=None, stroke=None, stroke_width=0):
        attrs = [f'class="{css_class}"']
        for key, value in (data or {}).items():
            attrs.append(f'data-{key}="{escape(str(value))}"')
        attrs.append(f'cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}" fill="{fill}"')
        if stroke:
            attrs.append(f'stroke="{stroke}" stroke-width="{stroke_width}"')
        self.parts.append(f'<circle {" ".join(attrs)}/>')

    def text(self, x, y, content, size, fill='#000000', css_class='label', anchor='start'):
        self.parts.append(
            f'<text class="{css_class}" x="{_num(x)}" y="{_num(y)}" font-family="sans-serif" '
            f'font-size="{size}" fill="{fill}" text-anchor="{anchor}">{escape(content)}</text>'
        )

    def get_svg(self):
        return '\n'.join(self.parts + ['</svg>']) + '\n'
