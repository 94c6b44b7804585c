"""Deterministic procedural geo-temporal world.

Generates ground-level scenes, time-invariant satellite tiles, and oracle
transient attributes whose ground truth is known exactly. The appearance
model is intentionally simple but carries the correlations a timestamp
verifier must learn: the day/night cycle (sky brightness follows the sun
elevation, windows light up at night), hemisphere-dependent seasons (snow,
vegetation), and weather noise that is *not* predictable from the timestamp.

Every operation is a pure function of (inputs, seeds): rendering the same
camera/timestamp/seed twice yields bit-identical images.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import (GROUND, SATELLITE, GeoLocation, ImageTensor, Sample, Timestamp,
                   TransientAttributes, quantize_pixels)
from .errors import ValidationError

# Representative day of year for each month (the 15th; month granularity only).
_DAY_OF_YEAR = (15, 46, 74, 105, 135, 166, 196, 227, 258, 288, 319, 349)

#: The 40 attribute names, in storage order. The first block is grounded
#: directly in scene latents, the middle block mixes latents with terrain
#: context, and the last five are pure per-sample noise: they stand in for
#: subjective concepts no pixel or timestamp can predict, which gives the
#: attribute-ranking analysis known-uninformative entries to rank last.
ATTRIBUTE_NAMES = (
    "daylight", "night", "dawndusk", "bright", "dark", "sunny", "clouds", "fog",
    "snow", "cold", "warm", "summer", "winter", "lush", "dry", "moist",
    "busy", "glowing", "rugged", "colorful", "dull", "gloomy", "soothing",
    "stressful", "exciting", "beautiful", "windy", "rain", "storm", "ice",
    "flowers", "spring", "autumn", "midday", "hazy",
    "sentimental", "mysterious", "boring", "nostalgic", "whimsical",
)

PURE_NOISE_ATTRIBUTES = ("sentimental", "mysterious", "boring", "nostalgic", "whimsical")

assert len(ATTRIBUTE_NAMES) == 40


@dataclass(frozen=True)
class CameraSpec:
    """A static outdoor camera: a fixed viewpoint with fixed surroundings."""

    camera_id: str
    location: GeoLocation
    scene_seed: int
    urbanness: float
    vegetation_fraction: float
    coastal: bool

    def __post_init__(self):
        if not 0.0 <= self.urbanness <= 1.0:
            raise ValidationError(f"urbanness must be in [0, 1], got {self.urbanness}")
        if not 0.0 <= self.vegetation_fraction <= 1.0:
            raise ValidationError(
                f"vegetation_fraction must be in [0, 1], got {self.vegetation_fraction}")


@dataclass(frozen=True)
class SceneLatents:
    """Everything that determines the appearance of one ground-level scene."""

    sun_elevation: float      # degrees above horizon
    hour_angle: float         # degrees; negative = morning, positive = afternoon
    daylight: float           # [0, 1]
    season_phase: float       # [0, 1], hemisphere-aware (1 = local midsummer)
    temperature_proxy: float  # unbounded; < 0 brings snow
    snow_cover: float         # [0, 1]
    greenness: float          # [0, 1]
    cloudiness: float         # [0, 1]
    urbanness: float          # [0, 1], copied from the camera
    vegetation_fraction: float
    noise_seed: int           # drives weather texture and noise attributes


# ---------------------------------------------------------------------------
# solar geometry and latent derivation
# ---------------------------------------------------------------------------

def solar_declination(month: int) -> float:
    """Sun declination in degrees for the representative day of ``month``."""
    d = _DAY_OF_YEAR[month - 1]
    return -23.44 * math.cos(2.0 * math.pi * (d + 10) / 365.0)


def sun_elevation(location: GeoLocation, t: Timestamp) -> float:
    """Sun elevation in degrees at a location for a (month, hour-UTC) timestamp.

    Uses the standard declination/hour-angle model with local solar time
    ``hour + lon / 15``.
    """
    delta = math.radians(solar_declination(t.month))
    phi = math.radians(location.lat)
    hour_local = t.hour + location.lon / 15.0
    h_angle = math.radians(15.0 * (hour_local - 12.0))
    sin_el = (math.sin(phi) * math.sin(delta)
              + math.cos(phi) * math.cos(delta) * math.cos(h_angle))
    return math.degrees(math.asin(min(1.0, max(-1.0, sin_el))))


def hour_angle(location: GeoLocation, t: Timestamp) -> float:
    """Hour angle in degrees; negative before local solar noon."""
    hour_local = t.hour + location.lon / 15.0
    h = (15.0 * (hour_local - 12.0)) % 360.0
    return h - 360.0 if h > 180.0 else h


def daylight_from_elevation(elevation: float) -> float:
    """Smoothstep of the sun elevation over the civil-twilight band [-6, +6] deg."""
    x = min(1.0, max(0.0, (elevation + 6.0) / 12.0))
    return x * x * (3.0 - 2.0 * x)


def season_phase(lat: float, month: int) -> float:
    """Seasonal phase in [0, 1]; peaks in July north of the equator, January south."""
    peak_month = 7 if lat >= 0.0 else 1
    return 0.5 + 0.5 * math.cos(2.0 * math.pi * (month - peak_month) / 12.0)


def _sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


# ---------------------------------------------------------------------------
# seeded hashing and value noise (the terrain substrate)
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


def mix_seed(*parts) -> int:
    """Combine integers/strings into one 64-bit seed, order sensitive."""
    h = 0x9E3779B97F4A7C15
    for p in parts:
        if isinstance(p, str):
            p = int.from_bytes(p.encode("utf-8").ljust(8, b"\0")[:8], "little")
        z = (h ^ (int(p) & _MASK64)) & _MASK64
        z = (z + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        h = z ^ (z >> 31)
    return h


def _hash01(seed: int, xi: np.ndarray, yi: np.ndarray) -> np.ndarray:
    """SplitMix-style hash of integer lattice coordinates to floats in [0, 1)."""
    with np.errstate(over="ignore"):
        z = (xi.astype(np.uint64) * np.uint64(0x9E3779B97F4A7C15)
             + yi.astype(np.uint64) * np.uint64(0xC2B2AE3D27D4EB4F)
             + np.uint64(seed & _MASK64))
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) / float(1 << 53)


def value_noise(seed: int, lat, lon, freq: float) -> np.ndarray:
    """Smooth seeded noise field over geographic coordinates.

    ``freq`` is cycles per degree: nearby points give nearby values, so small
    location jitter perturbs terrain-derived quantities smoothly.
    """
    x = np.asarray(lon, dtype=np.float64) * freq
    y = np.asarray(lat, dtype=np.float64) * freq
    x0 = np.floor(x).astype(np.int64)
    y0 = np.floor(y).astype(np.int64)
    fx = x - x0
    fy = y - y0
    wx = fx * fx * (3.0 - 2.0 * fx)
    wy = fy * fy * (3.0 - 2.0 * fy)
    n00 = _hash01(seed, x0, y0)
    n10 = _hash01(seed, x0 + 1, y0)
    n01 = _hash01(seed, x0, y0 + 1)
    n11 = _hash01(seed, x0 + 1, y0 + 1)
    return (n00 * (1 - wx) * (1 - wy) + n10 * wx * (1 - wy)
            + n01 * (1 - wx) * wy + n11 * wx * wy)


# ---------------------------------------------------------------------------
# the world
# ---------------------------------------------------------------------------

# Geographic span of one satellite tile, in degrees. Small jitter shifts the
# window (most content survives); jitter of a degree or more replaces it.
TILE_SPAN_DEG = 1.0


class World:
    """A seeded planet: terrain fields plus per-camera scene rendering."""

    def __init__(self, seed: int = 0, image_size: int = 64):
        if image_size < 16:
            raise ValidationError(f"image_size must be >= 16, got {image_size}")
        self.seed = int(seed)
        self.image_size = int(image_size)
        self._s_water = mix_seed(seed, "water")
        self._s_urban = mix_seed(seed, "urban")
        self._s_veg = mix_seed(seed, "vegetation")
        self._s_tex = mix_seed(seed, "texture")

    # -- terrain fields ----------------------------------------------------

    def water_level(self, lat, lon) -> np.ndarray:
        """Water where this field is negative."""
        v = (value_noise(self._s_water, lat, lon, 0.12)
             + 0.45 * value_noise(self._s_water + 1, lat, lon, 0.45))
        return v / 1.45 - 0.355

    def urbanness_at(self, lat, lon) -> np.ndarray:
        raw = (0.65 * value_noise(self._s_urban, lat, lon, 0.07)
               + 0.35 * value_noise(self._s_urban + 1, lat, lon, 0.31))
        return np.clip((raw - 0.32) * 1.9, 0.0, 1.0)

    def vegetation_at(self, lat, lon) -> np.ndarray:
        raw = (0.7 * value_noise(self._s_veg, lat, lon, 0.05)
               + 0.45 * value_noise(self._s_veg + 1, lat, lon, 0.23))
        polar_damp = np.clip(1.0 - (np.abs(np.asarray(lat, dtype=np.float64)) - 55.0) / 25.0,
                             0.0, 1.0)
        return np.clip(raw * polar_damp, 0.0, 1.0)

    def make_camera(self, location: GeoLocation, camera_id: str = None) -> CameraSpec:
        """Instantiate the camera the terrain fields imply at ``location``."""
        lat, lon = location.lat, location.lon
        if camera_id is None:
            camera_id = f"cam_{lat:+08.3f}_{lon:+09.3f}"
        window = self._tile_window(location)
        water_frac = float(np.mean(self.water_level(window[0], window[1]) < 0.0))
        return CameraSpec(
            camera_id=camera_id,
            location=location,
            scene_seed=mix_seed(self.seed, "scene", round(lat * 1e4), round(lon * 1e4)),
            urbanness=float(self.urbanness_at(lat, lon)),
            vegetation_fraction=float(self.vegetation_at(lat, lon)),
            coastal=bool(0.02 < water_frac < 0.75),
        )

    # -- latents -----------------------------------------------------------

    def derive_latents(self, cam: CameraSpec, t: Timestamp, sample_seed: int) -> SceneLatents:
        """All appearance drivers for one (camera, timestamp, sample) triple."""
        elev = sun_elevation(cam.location, t)
        phase = season_phase(cam.location.lat, t.month)
        noise_seed = mix_seed(cam.scene_seed, t.month, t.hour, sample_seed)
        rng = np.random.default_rng(noise_seed)
        temp = 22.0 * phase - 0.4 * abs(cam.location.lat) + 7.0 + 2.0 * (2.0 * rng.random() - 1.0)
        snow = float(np.clip(-temp / 10.0, 0.0, 1.0))
        return SceneLatents(
            sun_elevation=elev,
            hour_angle=hour_angle(cam.location, t),
            daylight=daylight_from_elevation(elev),
            season_phase=phase,
            temperature_proxy=temp,
            snow_cover=snow,
            greenness=float(np.clip(cam.vegetation_fraction * phase, 0.0, 1.0)),
            cloudiness=float(rng.random()),
            urbanness=cam.urbanness,
            vegetation_fraction=cam.vegetation_fraction,
            noise_seed=noise_seed,
        )

    # -- ground rendering --------------------------------------------------

    def horizon_row(self, cam: CameraSpec) -> int:
        """First ground row of this camera's view."""
        rng = np.random.default_rng(mix_seed(cam.scene_seed, "layout"))
        return int(self.image_size * (0.42 + 0.08 * rng.random()))

    def render_ground(self, cam: CameraSpec, t: Timestamp, sample_seed: int) -> ImageTensor:
        """Ground-level view of the camera's scene at a timestamp."""
        return self.render_from_latents(cam, self.derive_latents(cam, t, sample_seed))

    def render_from_latents(self, cam: CameraSpec, lat: SceneLatents) -> ImageTensor:
        """Render a scene directly from latents (the latents fix everything)."""
        n = self.image_size
        img = np.zeros((n, n, 3), dtype=np.float64)
        horizon = self.horizon_row(cam)
        d = lat.daylight
        sun_h = max(0.0, math.sin(math.radians(max(0.0, min(90.0, lat.sun_elevation)))))
        twilight = max(0.0, 1.0 - abs(lat.sun_elevation) / 8.0)

        rng_w = np.random.default_rng(mix_seed(lat.noise_seed, "weather"))
        rng_cam = np.random.default_rng(mix_seed(cam.scene_seed, "layout"))
        rng_cam.random()  # horizon draw, keep streams aligned with horizon_row

        # sky: night base plus a day component whose brightness follows the
        # sun elevation, so 10 AM and 1 PM are distinguishable, not just
        # day vs night
        gy = (np.arange(horizon, dtype=np.float64) / max(1, horizon - 1))[:, None, None]
        night_sky = np.array([0.023, 0.03, 0.085]) + gy * np.array([0.023, 0.03, 0.04])
        day_sky = np.array([0.34, 0.60, 0.97]) + gy * np.array([0.38, 0.22, 0.015])
        sky = night_sky * (1.0 - d) + day_sky * d * (0.38 + 0.62 * sun_h)

        # warm horizon band at dawn/dusk
        sky += twilight * (0.35 + 0.65 * gy) * np.array([0.48, 0.2, 0.0])
        sky = np.broadcast_to(sky, (horizon, n, 3)).copy()

        # east/west brightness gradient: scenes face south, so mornings are
        # brighter on the left; fades as the sun climbs
        side = 1.0 if lat.hour_angle >= 0.0 else -1.0
        cx = (2.0 * np.arange(n, dtype=np.float64) / (n - 1) - 1.0)[None, :, None]
        sky *= 1.0 + 0.22 * side * cx * d * max(0.0, 1.0 - lat.sun_elevation / 55.0)

        # sun glow disk at (hour-angle, elevation) position
        if lat.sun_elevation > -2.0:
            sun_x = (0.5 + 0.5 * min(1.0, max(-1.0, lat.hour_angle / 90.0))) * (n - 1)
            sun_y = (1.0 - min(90.0, max(0.0, lat.sun_elevation)) / 90.0) * (horizon - 1)
            yy = np.arange(horizon, dtype=np.float64)[:, None]
            xx = np.arange(n, dtype=np.float64)[None, :]
            d2 = (yy - sun_y) ** 2 + (xx - sun_x) ** 2
            glow = np.exp(-d2 / (2.0 * (n / 14.0) ** 2))[:, :, None]
            strength = min(1.0, d + 0.3 * twilight) * (1.0 - 0.75 * lat.cloudiness)
            sky += glow * strength * np.array([0.95, 0.85, 0.5])

        # cloud cover: low-frequency blotches, visible only when lit
        coarse = rng_w.random((7, 7))
        cloud_field = _bilinear_upsample(coarse, horizon, n)
        cover = np.clip((cloud_field - (1.0 - lat.cloudiness)) * 2.4, 0.0, 1.0)[:, :, None]
        cloud_color = np.array([0.72, 0.73, 0.76]) * (0.12 + 0.88 * d * (0.5 + 0.5 * sun_h))
        sky = sky * (1.0 - 0.85 * cover) + cloud_color * 0.85 * cover

        img[:horizon] = sky

        # ground: soil/vegetation mix, whitened by snow, lit by ambient light
        ambient = 0.06 + 0.94 * d * (0.45 + 0.55 * sun_h)
        ambient += 0.05 * lat.urbanness * (1.0 - d)  # city glow
        soil = np.array([0.30, 0.24, 0.16])
        grass = np.array([0.12, 0.42, 0.10])
        base = soil * (1.0 - lat.greenness) + grass * lat.greenness
        gh = n - horizon
        tex_static = rng_cam.random((gh, n, 1)) * 0.10 - 0.05
        tex_sample = rng_w.random((gh, n, 1)) * 0.05 - 0.025
        ground = base[None, None, :] + tex_static + tex_sample
        snow_color = np.array([0.88, 0.90, 0.96])
        ground = ground * (1.0 - lat.snow_cover) + snow_color[None, None, :] * lat.snow_cover
        depth = (np.arange(gh, dtype=np.float64) / max(1, gh - 1))[:, None, None]
        img[horizon:] = ground * ambient * (0.82 + 0.18 * depth)

        # building silhouettes; windows glow when it is dark outside
        n_buildings = int(round(cam.urbanness * 6))
        wall = np.array([0.10, 0.10, 0.125]) * (0.25 + 0.75 * ambient)
        window_lit = np.array([0.95, 0.83, 0.38])
        for _ in range(n_buildings):
            bw = int(rng_cam.integers(max(2, n // 16), max(3, n // 7)))
            bx = int(rng_cam.integers(0, max(1, n - bw)))
            bh = int(rng_cam.integers(int(n * 0.10), int(n * 0.30)))
            top = max(0, horizon - bh)
            bot = min(n, horizon + max(2, n // 24))
            img[top:bot, bx:bx + bw] = wall
            step = max(2, n // 22)
            lit = d < 0.2
            for wy in range(top + 1, bot - 1, step):
                for wx in range(bx + 1, bx + bw - 1, step):
                    if lit:
                        img[wy, wx] = window_lit * (0.75 + 0.25 * rng_cam.random())
                    else:
                        img[wy, wx] = wall * 1.6

        # fog flattens contrast in heavy weather
        fog = max(0.0, lat.cloudiness - 0.7) / 0.3
        if fog > 0:
            grey = np.array([0.55, 0.56, 0.58]) * (0.15 + 0.85 * ambient)
            img = img * (1.0 - 0.5 * fog) + grey * 0.5 * fog

        pixels = quantize_pixels(np.clip(img, 0.0, 1.0) * 2.0 - 1.0)
        return ImageTensor(pixels=pixels, role=GROUND)

    # -- satellite rendering -----------------------------------------------

    def _tile_window(self, location: GeoLocation):
        """Per-pixel geographic coordinates of a tile centred on ``location``."""
        n = self.image_size
        res = TILE_SPAN_DEG / n
        rows = (np.arange(n, dtype=np.float64) - (n - 1) / 2.0)
        cols = (np.arange(n, dtype=np.float64) - (n - 1) / 2.0)
        lat_g = location.lat - rows[:, None] * res + np.zeros((1, n))
        lon_g = location.lon + cols[None, :] * res + np.zeros((n, 1))
        return lat_g, lon_g

    def render_satellite(self, cam: CameraSpec) -> ImageTensor:
        """Basemap-style overhead tile: structure only, no time dependence.

        Road/building density follows the camera's urbanness, vegetation
        texture its vegetation fraction, and a water region appears exactly
        when the camera is coastal. Geometry is anchored to geographic
        coordinates so nearby locations produce overlapping tiles.
        """
        n = self.image_size
        lat_g, lon_g = self._tile_window(cam.location)

        veg_speckle = value_noise(self._s_tex, lat_g, lon_g, 12.0)
        green = np.clip(cam.vegetation_fraction * (0.35 + 1.1 * veg_speckle), 0.0, 1.0)
        soil = np.array([0.42, 0.36, 0.26])
        veg = np.array([0.10, 0.33, 0.08])
        img = soil[None, None, :] * (1.0 - green[:, :, None]) + veg[None, None, :] * green[:, :, None]

        # road grid on geographic lines; a line is drawn when its hash clears
        # the urbanness threshold, so density scales with urbanness and
        # urbanness zero draws nothing
        if cam.urbanness > 0.0:
            spacing = TILE_SPAN_DEG / 14.0
            road_color = np.array([0.55, 0.55, 0.56])
            half_w = TILE_SPAN_DEG / n * (0.6 + 1.0 * cam.urbanness)
            for grid, other in ((lat_g, lon_g), (lon_g, lat_g)):
                idx = np.rint(grid / spacing)
                dist = np.abs(grid - idx * spacing)
                seg = np.floor(other / 2.0)
                keep = _hash01(self._s_urban + 7, idx.astype(np.int64),
                               seg.astype(np.int64)) < cam.urbanness
                mask = (dist < half_w) & keep
                img[mask] = road_color
            blocks = value_noise(self._s_tex + 3, lat_g, lon_g, 20.0)
            block_mask = blocks > (1.0 - 0.35 * cam.urbanness)
            img[block_mask] = np.array([0.36, 0.35, 0.34])

        if cam.coastal:
            water = self.water_level(lat_g, lon_g) < 0.0
            if not water.any():
                # camera says coastal but the window has no field water:
                # synthesize a shoreline so the flag stays truthful
                theta = 2.0 * math.pi * _hash01(self._s_water + 9,
                                                np.int64(round(cam.location.lat * 100)),
                                                np.int64(round(cam.location.lon * 100)))
                yy, xx = np.mgrid[0:n, 0:n]
                proj = ((xx - n / 2) * math.cos(theta) + (yy - n / 2) * math.sin(theta)) / n
                water = proj > 0.22
            img[water] = np.array([0.10, 0.22, 0.47])

        pixels = quantize_pixels(np.clip(img, 0.0, 1.0) * 2.0 - 1.0)
        return ImageTensor(pixels=pixels, role=SATELLITE)

    def tile_at(self, location: GeoLocation) -> ImageTensor:
        """Satellite tile for an arbitrary location (used for jittered fixes)."""
        return self.render_satellite(self.make_camera(location))

    def daylight_at(self, location: GeoLocation, t: Timestamp) -> float:
        return daylight_from_elevation(sun_elevation(location, t))


def _bilinear_upsample(coarse: np.ndarray, h: int, w: int) -> np.ndarray:
    """Bilinear resize of a small grid to (h, w)."""
    ch, cw = coarse.shape
    y = np.linspace(0, ch - 1, h)
    x = np.linspace(0, cw - 1, w)
    y0 = np.floor(y).astype(int)
    x0 = np.floor(x).astype(int)
    y1 = np.minimum(y0 + 1, ch - 1)
    x1 = np.minimum(x0 + 1, cw - 1)
    fy = (y - y0)[:, None]
    fx = (x - x0)[None, :]
    return (coarse[np.ix_(y0, x0)] * (1 - fy) * (1 - fx)
            + coarse[np.ix_(y1, x0)] * fy * (1 - fx)
            + coarse[np.ix_(y0, x1)] * (1 - fy) * fx
            + coarse[np.ix_(y1, x1)] * fy * fx)


# ---------------------------------------------------------------------------
# oracle attributes
# ---------------------------------------------------------------------------

def oracle_attributes(latents: SceneLatents) -> TransientAttributes:
    """Ground-truth transient attributes implied by the scene latents.

    Grounded slots are deterministic functions of the latents; the
    ``PURE_NOISE_ATTRIBUTES`` slots are seeded uniform noise and carry no
    information about the scene or the timestamp.
    """
    d = latents.daylight
    elev = latents.sun_elevation
    tw = max(0.0, 1.0 - abs(elev) / 6.0)
    s = max(0.0, math.sin(math.radians(max(0.0, min(90.0, elev)))))
    p = latents.season_phase
    snow = latents.snow_cover
    green = latents.greenness
    cl = latents.cloudiness
    u = latents.urbanness
    temp = latents.temperature_proxy

    rng = np.random.default_rng(mix_seed(latents.noise_seed, "attributes"))
    noise = rng.random(8)

    bright = d * (0.4 + 0.6 * s)
    colorful = min(1.0, d * (0.25 + 0.45 * green + 0.5 * tw))
    values = {
        "daylight": d,
        "night": 1.0 - d,
        "dawndusk": tw,
        "bright": bright,
        "dark": 1.0 - bright,
        "sunny": d * (1.0 - cl),
        "clouds": cl,
        "fog": cl * cl,
        "snow": snow,
        "cold": _sigmoid(-temp / 6.0),
        "warm": _sigmoid((temp - 8.0) / 6.0),
        "summer": p,
        "winter": 1.0 - p,
        "lush": green,
        "dry": min(1.0, max(0.0, 1.0 - green - 0.3 * cl)),
        "moist": min(1.0, 0.6 * cl + 0.4 * green),
        "busy": min(1.0, u * (0.3 + 0.7 * d)),
        "glowing": min(1.0, 1.2 * u * (1.0 - d)),
        "rugged": 1.0 - u,
        "colorful": colorful,
        "dull": 1.0 - colorful,
        "gloomy": min(1.0, cl * (0.45 + 0.55 * (1.0 - d))),
        "soothing": min(1.0, 0.5 * green + 0.3 * d * (1.0 - cl) + 0.2 * (1.0 - u)),
        "stressful": min(1.0, (0.6 * u + 0.4 * cl) * (0.4 + 0.6 * d)),
        "exciting": min(1.0, 0.5 * tw + 0.5 * u * (1.0 - d)),
        "beautiful": min(1.0, 0.4 * tw + 0.3 * d * (1.0 - cl) + 0.3 * green),
        "windy": min(1.0, 0.5 * cl + 0.5 * noise[0]),
        "rain": min(1.0, max(0.0, (cl - 0.55) * 1.8) * _sigmoid(temp / 3.0)),
        "storm": min(1.0, max(0.0, (cl - 0.7) * 2.5)),
        "ice": min(1.0, 0.7 * snow + 0.3 * _sigmoid(-temp / 4.0)),
        "flowers": min(1.0, green * (1.0 - snow) * (0.3 + 0.7 * p)),
        "spring": 4.0 * p * (1.0 - p),
        "autumn": min(1.0, 4.0 * p * (1.0 - p) * (0.4 + 0.6 * (1.0 - green))),
        "midday": min(1.0, max(0.0, 1.2 * s - 0.1)),
        "hazy": min(1.0, 0.6 * cl + 0.4 * d * (1.0 - s)),
        "sentimental": noise[1],
        "mysterious": noise[2],
        "boring": noise[3],
        "nostalgic": noise[4],
        "whimsical": noise[5],
    }
    vec = np.array([values[name] for name in ATTRIBUTE_NAMES], dtype=np.float64)
    return TransientAttributes(values=np.clip(vec, 0.0, 1.0), names=ATTRIBUTE_NAMES)


# ---------------------------------------------------------------------------
# dataset generation
# ---------------------------------------------------------------------------

# Local-hour sampling weights: concentrated on daytime (people photograph
# mostly between 10 AM and 8 PM) but with enough dawn/dusk/night mass that
# day-night signal is identifiable.
_HOUR_WEIGHTS = np.exp(-(((np.arange(24) - 14.5) / 3.2) ** 2)) + 0.32
_HOUR_WEIGHTS = _HOUR_WEIGHTS / _HOUR_WEIGHTS.sum()


def generate_dataset(n_cameras: int, samples_per_camera: int, seed: int = 0,
                     image_size: int = 64) -> "tuple[list[Sample], World]":
    """Generate a deterministic dataset of geo-temporally consistent samples.

    Returns the samples and the world that produced them (the world is needed
    later to re-render satellite tiles for perturbed locations).
    """
    if n_cameras <= 0 or samples_per_camera <= 0:
        raise ValidationError("n_cameras and samples_per_camera must be positive")
    world = World(seed=seed, image_size=image_size)
    rng = np.random.default_rng(mix_seed(seed, "dataset"))
    samples = []
    for ci in range(n_cameras):
        hemisphere = 1.0 if ci % 2 == 0 else -1.0
        for _ in range(50):
            lat = hemisphere * rng.uniform(8.0, 62.0)
            lon = rng.uniform(-179.9, 180.0)
            if world.water_level(lat, lon) >= 0.0:
                break
        location = GeoLocation(lat=round(float(lat), 4), lon=round(float(lon), 4))
        cam = world.make_camera(location, camera_id=f"cam{ci:03d}")
        tile = world.render_satellite(cam)
        for k in range(samples_per_camera):
            month = int(rng.integers(1, 13))
            local_h = int(rng.choice(24, p=_HOUR_WEIGHTS))
            utc_h = int(round(local_h - location.lon / 15.0)) % 24
            t = Timestamp(month=month, hour=utc_h)
            sample_seed = int(rng.integers(0, 2 ** 62))
            latents = world.derive_latents(cam, t, sample_seed)
            samples.append(Sample(
                id=f"{cam.camera_id}-{k:04d}",
                camera_id=cam.camera_id,
                ground=world.render_from_latents(cam, latents),
                satellite=tile,
                location=location,
                timestamp=t,
                attributes=oracle_attributes(latents),
            ))
    return samples, world
