"""Canonical data types and input encodings.

Everything the rest of the package passes around is defined here: timestamps
and their [-1, 1] scaling, geographic coordinates and their unit-sphere ECEF
encoding, image tensors, the 40-dimensional transient-attribute vector, and
the sample/tuple records that tie them together.

All functions in this module are pure and safe to call concurrently.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

ATTRIBUTE_DIM = 40


@dataclass(frozen=True)
class Timestamp:
    """Capture time at month/hour granularity, UTC."""

    month: int  # 1..12
    hour: int   # 0..23

    def __post_init__(self):
        if not (isinstance(self.month, (int, np.integer)) and 1 <= self.month <= 12):
            raise ValidationError(f"month must be an integer in [1, 12], got {self.month!r}")
        if not (isinstance(self.hour, (int, np.integer)) and 0 <= self.hour <= 23):
            raise ValidationError(f"hour must be an integer in [0, 23], got {self.hour!r}")
        object.__setattr__(self, "month", int(self.month))
        object.__setattr__(self, "hour", int(self.hour))


@dataclass(frozen=True)
class ScaledTimestamp:
    """Timestamp mapped linearly onto [-1, 1] per axis.

    (January, 0h) maps to (-1, -1) and (December, 23h) to (1, 1), both exactly.
    """

    m: float
    h: float

    def as_array(self) -> np.ndarray:
        return np.array([self.m, self.h], dtype=np.float64)


def scale_timestamp(t: Timestamp) -> ScaledTimestamp:
    """Map a timestamp onto the [-1, 1] x [-1, 1] square, endpoints exact."""
    return ScaledTimestamp(m=2.0 * (t.month - 1) / 11.0 - 1.0,
                           h=2.0 * t.hour / 23.0 - 1.0)


def unscale_timestamp(st: ScaledTimestamp) -> Timestamp:
    """Inverse of :func:`scale_timestamp`; rounds to the nearest grid point."""
    month = int(round((st.m + 1.0) * 11.0 / 2.0)) + 1
    hour = int(round((st.h + 1.0) * 23.0 / 2.0))
    return Timestamp(month=month, hour=hour)


def wrap_longitude(lon: float) -> float:
    """Wrap a longitude in degrees into (-180, 180]."""
    return 180.0 - (180.0 - lon) % 360.0


@dataclass(frozen=True)
class GeoLocation:
    """Geographic coordinates in degrees; lat in [-90, 90], lon in (-180, 180]."""

    lat: float
    lon: float

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValidationError(f"lat must be in [-90, 90], got {self.lat}")
        if not -180.0 < self.lon <= 180.0:
            raise ValidationError(f"lon must be in (-180, 180], got {self.lon}")


@dataclass(frozen=True)
class EcefLocation:
    """Earth-centered earth-fixed coordinates on the unit sphere."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def norm(self) -> float:
        return math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)


def geo_to_ecef(location: GeoLocation) -> EcefLocation:
    """Convert lat/lon to unit-sphere ECEF (spherical Earth, surface point).

    Dividing by the Earth radius puts every surface point on the unit sphere,
    which keeps all three components inside [-1, 1] by construction.
    """
    phi = math.radians(location.lat)
    lam = math.radians(location.lon)
    return EcefLocation(x=math.cos(phi) * math.cos(lam),
                        y=math.cos(phi) * math.sin(lam),
                        z=math.sin(phi))


def jitter_location(location: GeoLocation, delta: float, axis: str, sign: int) -> GeoLocation:
    """Shift one coordinate by ``sign * delta`` degrees.

    Latitude is clamped at the poles; longitude wraps around the antimeridian.
    """
    if delta < 0:
        raise ValidationError(f"delta must be >= 0, got {delta}")
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {sign!r}")
    if axis == "lat":
        new_lat = min(90.0, max(-90.0, location.lat + sign * delta))
        return GeoLocation(lat=new_lat, lon=location.lon)
    if axis == "lon":
        return GeoLocation(lat=location.lat, lon=wrap_longitude(location.lon + sign * delta))
    raise ValidationError(f"axis must be 'lat' or 'lon', got {axis!r}")


GROUND = "ground"
SATELLITE = "satellite"


@dataclass(frozen=True)
class ImageTensor:
    """H x W x 3 image with float pixels in [-1, 1].

    ``role`` records whether this is a ground-level photo or a satellite tile;
    a few operations (occlusion, tile re-rendering) only make sense for one of
    the two.
    """

    pixels: np.ndarray
    role: str

    def __post_init__(self):
        px = self.pixels
        if not (isinstance(px, np.ndarray) and px.ndim == 3 and px.shape[2] == 3):
            raise ValidationError(f"pixels must be an HxWx3 array, got shape "
                                  f"{getattr(px, 'shape', None)}")
        if self.role not in (GROUND, SATELLITE):
            raise ValidationError(f"role must be '{GROUND}' or '{SATELLITE}', got {self.role!r}")
        lo, hi = float(px.min(initial=0.0)), float(px.max(initial=0.0))
        if lo < -1.0 - 1e-6 or hi > 1.0 + 1e-6:
            raise ValidationError(f"pixel values must lie in [-1, 1], found [{lo}, {hi}]")

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    def to_uint8(self) -> np.ndarray:
        """Quantize to the 8-bit lattice used for PNG storage."""
        return np.clip(np.rint((self.pixels + 1.0) * 127.5), 0, 255).astype(np.uint8)

    @classmethod
    def from_uint8(cls, raw: np.ndarray, role: str) -> "ImageTensor":
        """Decode 8-bit pixels back to [-1, 1]: p -> 2p/255 - 1."""
        return cls(pixels=(raw.astype(np.float32) * (2.0 / 255.0) - 1.0), role=role)


def quantize_pixels(pixels: np.ndarray) -> np.ndarray:
    """Snap float pixels in [-1, 1] onto the 256-level lattice 2k/255 - 1.

    Renderers emit quantized pixels so that PNG round trips are bit exact.
    """
    levels = np.clip(np.rint((pixels + 1.0) * 127.5), 0, 255)
    return (levels * (2.0 / 255.0) - 1.0).astype(np.float32)


@dataclass(frozen=True)
class TransientAttributes:
    """40-vector of scene appearance descriptors in [0, 1], with names."""

    values: np.ndarray
    names: tuple

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (ATTRIBUTE_DIM,):
            raise ValidationError(f"attributes must have exactly {ATTRIBUTE_DIM} values, "
                                  f"got shape {v.shape}")
        if len(self.names) != ATTRIBUTE_DIM:
            raise ValidationError(f"need {ATTRIBUTE_DIM} attribute names, got {len(self.names)}")
        if v.min() < -1e-9 or v.max() > 1.0 + 1e-9:
            raise ValidationError("attribute values must lie in [0, 1]")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "names", tuple(self.names))

    def __getitem__(self, name: str) -> float:
        try:
            return float(self.values[self.names.index(name)])
        except ValueError:
            raise KeyError(name) from None


@dataclass(frozen=True)
class Sample:
    """One observation: ground photo, satellite tile, location, true time.

    The satellite tile depends only on the location (and camera), never on the
    timestamp; the constructor cannot check that, but the synthetic world and
    the manifest loader both guarantee it.
    """

    id: str
    camera_id: str
    ground: ImageTensor
    satellite: ImageTensor
    location: GeoLocation
    timestamp: Timestamp
    attributes: TransientAttributes

    def __post_init__(self):
        if self.ground.role != GROUND:
            raise ValidationError(f"sample {self.id}: ground image has role {self.ground.role!r}")
        if self.satellite.role != SATELLITE:
            raise ValidationError(f"sample {self.id}: satellite image has role "
                                  f"{self.satellite.role!r}")


CONSISTENT = 0
INCONSISTENT = 1


@dataclass(frozen=True)
class VerificationTuple:
    """A sample paired with an alleged timestamp and a consistency label.

    label 0 means the alleged timestamp equals the true one (enforced here);
    label 1 means it was manipulated.
    """

    sample: Sample
    alleged: Timestamp
    label: int

    def __post_init__(self):
        if self.label not in (CONSISTENT, INCONSISTENT):
            raise ValidationError(f"label must be 0 or 1, got {self.label!r}")
        if self.label == CONSISTENT and self.alleged != self.sample.timestamp:
            raise ValidationError(
                f"tuple for sample {self.sample.id}: label 0 requires alleged == true "
                f"timestamp, got {self.alleged} vs {self.sample.timestamp}")

    @property
    def id(self) -> str:
        return f"{self.sample.id}@{self.alleged.month:02d}-{self.alleged.hour:02d}"


@dataclass(frozen=True)
class ConsistencyPrediction:
    """Softmax output (p_consistent, p_inconsistent)."""

    p_consistent: float
    p_inconsistent: float

    def __post_init__(self):
        if self.p_consistent < 0 or self.p_inconsistent < 0:
            raise ValidationError("probabilities must be nonnegative")
        total = self.p_consistent + self.p_inconsistent
        if abs(total - 1.0) > 1e-6:
            raise ValidationError(f"probabilities must sum to 1 within 1e-6, got {total}")

    def as_array(self) -> np.ndarray:
        return np.array([self.p_consistent, self.p_inconsistent], dtype=np.float64)
