//! Binary PPM (P6) snapshots of colorings on a rectangular grid.
//!
//! Palettes for κ = 3:
//!
//! | color | CCA    | GHM                    |
//! |-------|--------|------------------------|
//! | 0     | orange | dark blue (resting)    |
//! | 1     | green  | yellow (excited)       |
//! | 2     | yellow | red (refractory)       |
//!
//! For κ ≠ 3 color `i` is the hue `i/κ` on the HSV wheel at full saturation and
//! value, for either rule.

use std::io::Write;

use excitable_core::DynamicsKind;

pub type Rgb = [u8; 3];

pub const CCA_PALETTE: [Rgb; 3] = [[255, 140, 0], [34, 139, 34], [255, 215, 0]];
pub const GHM_PALETTE: [Rgb; 3] = [[0, 0, 96], [255, 215, 0], [200, 30, 30]];

pub fn palette(kind: DynamicsKind, kappa: u8) -> Vec<Rgb> {
    match (kind, kappa) {
        (DynamicsKind::Cca, 3) => CCA_PALETTE.to_vec(),
        (DynamicsKind::Ghm, 3) => GHM_PALETTE.to_vec(),
        _ => (0..kappa).map(|i| hsv_to_rgb(f64::from(i) / f64::from(kappa))).collect(),
    }
}

/// Fully saturated, full-value color at hue `h ∈ [0, 1)`.
fn hsv_to_rgb(h: f64) -> Rgb {
    let x = h * 6.0;
    let sector = x.floor() as u32 % 6;
    let f = x - x.floor();
    let up = (255.0 * f).round() as u8;
    let down = 255 - up;
    match sector {
        0 => [255, up, 0],
        1 => [down, 255, 0],
        2 => [0, 255, up],
        3 => [0, down, 255],
        4 => [up, 0, 255],
        _ => [255, 0, down],
    }
}

/// Encodes a row-major `width × height` grid of colors, each cell drawn as a
/// `scale × scale` block.
pub fn encode(colors: &[u8], width: usize, height: usize, palette: &[Rgb], scale: usize) -> Vec<u8> {
    assert_eq!(colors.len(), width * height, "grid size mismatch");
    assert!(scale >= 1);
    let (w, h) = (width * scale, height * scale);
    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    out.reserve(3 * w * h);
    for y in 0..height {
        let mut row = Vec::with_capacity(3 * w);
        for x in 0..width {
            let rgb = palette[usize::from(colors[x + width * y])];
            for _ in 0..scale {
                row.extend_from_slice(&rgb);
            }
        }
        for _ in 0..scale {
            out.extend_from_slice(&row);
        }
    }
    out
}

pub fn write(
    mut sink: impl Write,
    colors: &[u8],
    width: usize,
    height: usize,
    palette: &[Rgb],
    scale: usize,
) -> std::io::Result<()> {
    sink.write_all(&encode(colors, width, height, palette, scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_size() {
        let bytes = encode(&[0, 1, 2, 0, 1, 2], 3, 2, &CCA_PALETTE, 1);
        let header = b"P6\n3 2\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        assert_eq!(bytes.len(), header.len() + 18);
        assert_eq!(&bytes[header.len()..header.len() + 3], &CCA_PALETTE[0]);
    }

    #[test]
    fn monochromatic_is_one_color() {
        let bytes = encode(&[2; 4], 2, 2, &GHM_PALETTE, 3);
        let body = &bytes[b"P6\n6 6\n255\n".len()..];
        assert_eq!(body.len(), 3 * 36);
        assert!(body.chunks(3).all(|px| px == GHM_PALETTE[2]));
        let single = encode(&[1], 1, 1, &CCA_PALETTE, 1);
        assert_eq!(&single[single.len() - 3..], &CCA_PALETTE[1]);
    }

    #[test]
    fn wheel_palette_is_distinct() {
        let p = palette(DynamicsKind::Cca, 9);
        assert_eq!(p.len(), 9);
        assert_eq!(p[0], [255, 0, 0]);
        for i in 0..9 {
            for j in 0..i {
                assert_ne!(p[i], p[j]);
            }
        }
        assert_eq!(palette(DynamicsKind::Ghm, 3), GHM_PALETTE.to_vec());
    }
}
