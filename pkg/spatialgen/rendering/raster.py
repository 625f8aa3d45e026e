"""
Rasterizador determinista con Pillow
Sin antialiasing: discos y anillos se rellenan píxel a píxel de forma simétrica
"""
import io
import math

from PIL import Image, ImageDraw, ImageFont


def _snap(value):
    """Centro a múltiplo de medio píxel: el disco resultante es simétrico"""
    return round(value * 2) / 2


class RasterCanvas:
    def __init__(self, width, height, background='#ffffff'):
        self.image = Image.new('RGB', (width, height), background)
        self.draw = ImageDraw.Draw(self.image)
        self.draw.fontmode = '1'
        # Fuente bitmap incluida en Pillow: idéntica en cualquier sistema
        self.font = ImageFont.load_default()

    def _pixels_within(self, cx, cy, inner, outer):
        cx, cy = _snap(cx), _snap(cy)
        width, height = self.image.size
        pixels = []
        for j in range(max(0, math.floor(cy - outer) - 1), min(height, math.ceil(cy + outer) + 1)):
            for i in range(max(0, math.floor(cx - outer) - 1), min(width, math.ceil(cx + outer) + 1)):
                d2 = (i + 0.5 - cx) ** 2 + (j + 0.5 - cy) ** 2
                if d2 <= outer * outer and (inner < 0 or d2 > inner * inner):
                    pixels.append((i, j))
        return pixels

    def disk(self, cx, cy, r, fill):
        self.draw.point(self._pixels_within(cx, cy, -1, r), fill=fill)

    def ring(self, cx, cy, inner, outer, fill):
        self.draw.point(self._pixels_within(cx, cy, inner, outer), fill=fill)

    def line(self, x1, y1, x2, y2, fill, width=1):
        self.draw.line((round(x1), round(y1), round(x2), round(y2)), fill=fill, width=width)

    def rect(self, x, y, width, height, fill):
        self.draw.rectangle(
            (round(x), round(y), round(x + width) - 1, round(y + height) - 1), fill=fill
        )

    def text(self, x, y, content, fill='#000000', anchor='start'):
        """(x, y) es la línea base izquierda, como en SVG"""
        left, top, right, bottom = self.draw.textbbox((0, 0), content, font=self.font)
        if anchor == 'end':
            x -= right - left
        elif anchor == 'middle':
            x -= (right - left) / 2
        self.draw.text((round(x), round(y - bottom)), content, fill=fill, font=self.font)

    def to_png(self):
        buffer = io.BytesIO()
        self.image.save(buffer, format='PNG', optimize=False)
        return buffer.getvalue()
