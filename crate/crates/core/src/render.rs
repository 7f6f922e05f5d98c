//! Raster output of a permuted matrix.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{intersection_len, Axis, BinaryMatrix, Biclustering, Layout};
use crate::par::*;
use crate::postprocess::Suggestions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Zone {
    Clustered,
    Suggested,
    Unclustered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellCategory {
    pub zone: Zone,
    pub value: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rgb(pub [u8; 3]);

impl Rgb {
    /// Relative luminance with Rec. 709 weights, scaled by 10000.
    pub fn luminance(self) -> u32 {
        let [r, g, b] = self.0.map(u32::from);
        2126 * r + 7152 * g + 722 * b
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [r, g, b] = self.0;
        write!(f, "#{r:02X}{g:02X}{b:02X}")
    }
}

impl FromStr for Rgb {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let hex = s.strip_prefix('#').unwrap_or(s);
        if hex.len() != 6 || !hex.is_ascii() {
            return Err(format!("expected #RRGGBB, got `{s}`"));
        }
        let byte = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|e| format!("`{s}`: {e}"));
        Ok(Rgb([byte(0)?, byte(2)?, byte(4)?]))
    }
}

impl Serialize for Rgb {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rgb {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dark tone for 1-entries, light tone for 0-entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TonePair {
    pub one: Rgb,
    pub zero: Rgb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Palette {
    pub clustered: TonePair,
    pub suggested: TonePair,
    pub unclustered: TonePair,
    /// Two-color mode: 1-entries bright, 0-entries dark.
    pub mono: TonePair,
    pub hull: Rgb,
}

impl Default for Palette {
    fn default() -> Self {
        Self {
            clustered: TonePair {
                one: Rgb([0x1B, 0x78, 0x37]),
                zero: Rgb([0xA6, 0xDB, 0xA0]),
            },
            suggested: TonePair {
                one: Rgb([0xB2, 0x18, 0x2B]),
                zero: Rgb([0xF4, 0xA5, 0x82]),
            },
            unclustered: TonePair {
                one: Rgb([0x21, 0x66, 0xAC]),
                zero: Rgb([0x92, 0xC5, 0xDE]),
            },
            mono: TonePair {
                one: Rgb([0xFF, 0xFF, 0xFF]),
                zero: Rgb([0x00, 0x00, 0x00]),
            },
            hull: Rgb([0xFF, 0x00, 0x00]),
        }
    }
}

impl Palette {
    /// Every zone's 1-tone must be strictly darker than its 0-tone, and the
    /// two-color pair must be distinguishable.
    pub fn validate(&self) -> Result<()> {
        for (name, pair) in [
            ("clustered", self.clustered),
            ("suggested", self.suggested),
            ("unclustered", self.unclustered),
        ] {
            if pair.one.luminance() >= pair.zero.luminance() {
                return Err(Error::InvalidPalette(format!(
                    "{name}: 1-tone {} must be darker than 0-tone {}",
                    pair.one, pair.zero
                )));
            }
        }
        if self.mono.one == self.mono.zero {
            return Err(Error::InvalidPalette("two-color tones are identical".into()));
        }
        Ok(())
    }

    pub fn color(&self, mode: ColorMode, cat: CellCategory) -> Rgb {
        let pair = match mode {
            ColorMode::TwoColor => self.mono,
            ColorMode::SixColor => match cat.zone {
                Zone::Clustered => self.clustered,
                Zone::Suggested => self.suggested,
                Zone::Unclustered => self.unclustered,
            },
        };
        if cat.value {
            pair.one
        } else {
            pair.zero
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorMode {
    TwoColor,
    #[default]
    SixColor,
}

impl fmt::Display for ColorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColorMode::TwoColor => "two-color",
            ColorMode::SixColor => "six-color",
        })
    }
}

impl FromStr for ColorMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "two-color" => Ok(ColorMode::TwoColor),
            "six-color" => Ok(ColorMode::SixColor),
            _ => Err(format!("unknown color mode `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub mode: ColorMode,
    /// Pixels per cell side.
    pub scale: u32,
    /// Cluster whose bounding rectangle is outlined.
    pub hull: Option<usize>,
    pub palette: Palette,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            mode: ColorMode::SixColor,
            scale: 1,
            hull: None,
            palette: Palette::default(),
        }
    }
}

/// Classifies cells (by original indices) into clustered, suggested and unclustered.
#[derive(Debug, Clone)]
pub struct Categorizer<'a> {
    a: &'a BinaryMatrix,
    row_sig: Vec<Vec<usize>>,
    col_sig: Vec<Vec<usize>>,
    row_suggested: Vec<Vec<usize>>,
    col_suggested: Vec<Vec<usize>>,
}

impl<'a> Categorizer<'a> {
    pub fn new(a: &'a BinaryMatrix, bc: &Biclustering, suggestions: &Suggestions) -> Self {
        let invert = |axis: Axis| {
            let mut out = vec![Vec::new(); a.len(axis)];
            for (i, members) in suggestions.suggested(axis).iter().enumerate() {
                for &e in members {
                    out[e].push(i);
                }
            }
            out
        };
        Self {
            a,
            row_sig: bc.memberships(Axis::Row, a.rows()),
            col_sig: bc.memberships(Axis::Column, a.cols()),
            row_suggested: invert(Axis::Row),
            col_suggested: invert(Axis::Column),
        }
    }

    pub fn category(&self, row: usize, col: usize) -> CellCategory {
        let zone = if intersection_len(&self.row_sig[row], &self.col_sig[col]) > 0 {
            Zone::Clustered
        } else if intersection_len(&self.row_suggested[row], &self.col_sig[col]) > 0
            || intersection_len(&self.row_sig[row], &self.col_suggested[col]) > 0
        {
            Zone::Suggested
        } else {
            Zone::Unclustered
        };
        CellCategory {
            zone,
            value: self.a.get(row, col),
        }
    }
}

/// Category of the cell at original position `(row, col)`.
pub fn categorize(
    row: usize,
    col: usize,
    a: &BinaryMatrix,
    bc: &Biclustering,
    suggestions: &Suggestions,
) -> CellCategory {
    Categorizer::new(a, bc, suggestions).category(row, col)
}

/// An 8-bit RGB raster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    /// Row-major RGB bytes.
    pub data: Vec<u8>,
}

impl Image {
    pub fn pixel(&self, x: usize, y: usize) -> Rgb {
        let i = 3 * (y * self.width + x);
        Rgb([self.data[i], self.data[i + 1], self.data[i + 2]])
    }

    fn set(&mut self, x: usize, y: usize, c: Rgb) {
        let i = 3 * (y * self.width + x);
        self.data[i..i + 3].copy_from_slice(&c.0);
    }

    /// Plain (ASCII) portable pixmap, one pixel per line.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + self.data.len() * 4);
        write!(out, "P3\n{} {}\n255\n", self.width, self.height).expect("write to vec");
        for px in self.data.chunks_exact(3) {
            writeln!(out, "{} {} {}", px[0], px[1], px[2]).expect("write to vec");
        }
        out
    }

    pub fn to_png(&self) -> Result<Vec<u8>> {
        use image::{ImageBuffer, ImageFormat, RgbImage};
        let img: RgbImage = ImageBuffer::from_raw(self.width as u32, self.height as u32, self.data.clone())
            .ok_or_else(|| Error::Encode("pixel buffer size mismatch".into()))?;
        let mut buf = std::io::Cursor::new(Vec::new());
        img.write_to(&mut buf, ImageFormat::Png)
            .map_err(|e| Error::Encode(e.to_string()))?;
        Ok(buf.into_inner())
    }
}

/// Draws the matrix under `layout`: the cell at visual `(i, j)` shows `A[pi_r^-1(i), pi_c^-1(j)]`.
pub fn render_image(
    a: &BinaryMatrix,
    layout: &Layout,
    bc: &Biclustering,
    suggestions: &Suggestions,
    opts: &RenderOptions,
) -> Result<Image> {
    opts.palette.validate()?;
    if opts.scale == 0 {
        return Err(Error::ZeroScale);
    }
    if layout.pi_r().len() != a.rows() || layout.pi_c().len() != a.cols() {
        return Err(Error::InvalidPermutation("layout does not match matrix dimensions".into()));
    }
    let scale = opts.scale as usize;
    let width = a.cols() * scale;
    let height = a.rows() * scale;
    let cats = Categorizer::new(a, bc, suggestions);
    let mut data = vec![0u8; width * height * 3];
    let band = width * 3 * scale;
    data.par_chunks_mut(band).enumerate().for_each(|(i, band)| {
        let row = layout.pi_r().inverse(i);
        let (first, rest) = band.split_at_mut(width * 3);
        for j in 0..a.cols() {
            let col = layout.pi_c().inverse(j);
            let c = opts.palette.color(opts.mode, cats.category(row, col));
            for px in first[j * scale * 3..(j + 1) * scale * 3].chunks_exact_mut(3) {
                px.copy_from_slice(&c.0);
            }
        }
        for line in rest.chunks_exact_mut(width * 3) {
            line.copy_from_slice(first);
        }
    });
    let mut img = Image { width, height, data };
    if let Some(h) = opts.hull {
        let cl = bc.clusters().get(h).ok_or(Error::IndexOutOfRange {
            axis: "cluster",
            index: h + 1,
            bound: bc.len(),
        })?;
        let span = |pi: &crate::model::Permutation, set: &[usize]| {
            let (lo, hi) = pi.image(set).fold((usize::MAX, 0), |(l, h), p| (l.min(p), h.max(p)));
            (lo * scale, (hi + 1) * scale - 1)
        };
        let (top, bottom) = span(layout.pi_r(), cl.rows());
        let (left, right) = span(layout.pi_c(), cl.cols());
        for x in left..=right {
            img.set(x, top, opts.palette.hull);
            img.set(x, bottom, opts.palette.hull);
        }
        for y in top..=bottom {
            img.set(left, y, opts.palette.hull);
            img.set(right, y, opts.palette.hull);
        }
    }
    Ok(img)
}
