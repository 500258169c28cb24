"""In-memory raster model shared by the codecs and every transform."""

from dataclasses import dataclass


@dataclass(frozen=True)
class RasterImage:
    """Decoded pixel grid: top-down rows, R,G,B byte per channel.

    ``channels`` holds exactly ``3 * width * height`` bytes, row-major
    from the top-left pixel. Every codec normalizes to this layout, so
    downstream code never cares which file format the image came from.
    """

    width: int
    height: int
    channels: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(
                f"image dimensions must be positive, got {self.width}x{self.height}"
            )
        object.__setattr__(self, "channels", bytes(self.channels))
        expected = 3 * self.width * self.height
        if len(self.channels) != expected:
            raise ValueError(
                f"channel buffer holds {len(self.channels)} bytes, "
                f"expected {expected} for {self.width}x{self.height}"
            )

    @property
    def slot_count(self) -> int:
        """Number of channel slots (one byte per color per pixel)."""
        return 3 * self.width * self.height

    def pixel(self, x: int, y: int) -> tuple[int, int, int]:
        """(R, G, B) of the pixel at column x, row y (top-down)."""
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f"pixel ({x}, {y}) outside {self.width}x{self.height}")
        base = 3 * (y * self.width + x)
        return (self.channels[base], self.channels[base + 1], self.channels[base + 2])
