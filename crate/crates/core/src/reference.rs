//! Phase shifts δ_l published for V₀ = 1, ħ = μ = 1, as printed (radians).

/// One published table entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedCell {
    pub l: u32,
    pub k: f64,
    pub alpha: f64,
    pub a: f64,
    pub delta: f64,
}

const fn cell(l: u32, k: f64, alpha: f64, a: f64, delta: f64) -> PublishedCell {
    PublishedCell {
        l,
        k,
        alpha,
        a,
        delta,
    }
}

/// Tables for l = 0, 1, 2 in printed row order: k, then α, then A = 0, 5.
pub const PUBLISHED_TABLES: [PublishedCell; 144] = [
    cell(0, 0.01, 0.050, 0.0, 85.99747),
    cell(0, 0.01, 0.050, 5.0, 96.02187),
    cell(0, 0.01, 0.075, 0.0, 56.30153),
    cell(0, 0.01, 0.075, 5.0, 67.31205),
    cell(0, 0.01, 0.100, 0.0, 42.77292),
    cell(0, 0.01, 0.100, 5.0, 52.53402),
    cell(0, 0.03, 0.050, 0.0, 83.01168),
    cell(0, 0.03, 0.050, 5.0, 93.33025),
    cell(0, 0.03, 0.075, 0.0, 54.93278),
    cell(0, 0.03, 0.075, 5.0, 65.15410),
    cell(0, 0.03, 0.100, 0.0, 41.11436),
    cell(0, 0.03, 0.100, 5.0, 50.98069),
    cell(0, 0.05, 0.050, 0.0, 80.67924),
    cell(0, 0.05, 0.050, 5.0, 90.94696),
    cell(0, 0.05, 0.075, 0.0, 53.47469),
    cell(0, 0.05, 0.075, 5.0, 63.51416),
    cell(0, 0.05, 0.100, 0.0, 39.91334),
    cell(0, 0.05, 0.100, 5.0, 49.70670),
    cell(0, 0.07, 0.050, 0.0, 78.66066),
    cell(0, 0.07, 0.050, 5.0, 88.84724),
    cell(0, 0.07, 0.075, 0.0, 52.15129),
    cell(0, 0.07, 0.075, 5.0, 62.09286),
    cell(0, 0.07, 0.100, 0.0, 38.90094),
    cell(0, 0.07, 0.100, 5.0, 48.61442),
    cell(0, 0.09, 0.050, 0.0, 76.85325),
    cell(0, 0.09, 0.050, 5.0, 86.95779),
    cell(0, 0.09, 0.075, 0.0, 50.95406),
    cell(0, 0.09, 0.075, 5.0, 60.81410),
    cell(0, 0.09, 0.100, 0.0, 38.00155),
    cell(0, 0.09, 0.100, 5.0, 47.63832),
    cell(0, 0.11, 0.050, 0.0, 75.20635),
    cell(0, 0.11, 0.050, 5.0, 85.23028),
    cell(0, 0.11, 0.075, 0.0, 49.86018),
    cell(0, 0.11, 0.075, 5.0, 59.64271),
    cell(0, 0.11, 0.100, 0.0, 37.18307),
    cell(0, 0.11, 0.100, 5.0, 46.74557),
    cell(0, 0.13, 0.050, 0.0, 73.68827),
    cell(0, 0.13, 0.050, 5.0, 83.63312),
    cell(0, 0.13, 0.075, 0.0, 48.85074),
    cell(0, 0.13, 0.075, 5.0, 58.55770),
    cell(0, 0.13, 0.100, 0.0, 36.42819),
    cell(0, 0.13, 0.100, 5.0, 45.91819),
    cell(0, 0.15, 0.050, 0.0, 72.27707),
    cell(0, 0.15, 0.050, 5.0, 82.14437),
    cell(0, 0.15, 0.075, 0.0, 47.91182),
    cell(0, 0.15, 0.075, 5.0, 57.54473),
    cell(0, 0.15, 0.100, 0.0, 35.72587),
    cell(0, 0.15, 0.100, 5.0, 45.14486),
    cell(1, 0.01, 0.050, 0.0, 83.26582),
    cell(1, 0.01, 0.050, 5.0, 93.32007),
    cell(1, 0.01, 0.075, 0.0, 53.32553),
    cell(1, 0.01, 0.075, 5.0, 64.25479),
    cell(1, 0.01, 0.100, 0.0, 39.52724),
    cell(1, 0.01, 0.100, 5.0, 49.56731),
    cell(1, 0.03, 0.050, 0.0, 80.94760),
    cell(1, 0.03, 0.050, 5.0, 91.28052),
    cell(1, 0.03, 0.075, 0.0, 52.51662),
    cell(1, 0.03, 0.075, 5.0, 62.75149),
    cell(1, 0.03, 0.100, 0.0, 38.41452),
    cell(1, 0.03, 0.100, 5.0, 48.39482),
    cell(1, 0.05, 0.050, 0.0, 78.95579),
    cell(1, 0.05, 0.050, 5.0, 89.23458),
    cell(1, 0.05, 0.075, 0.0, 51.43166),
    cell(1, 0.05, 0.075, 5.0, 61.49191),
    cell(1, 0.05, 0.100, 0.0, 37.59783),
    cell(1, 0.05, 0.100, 5.0, 47.44867),
    cell(1, 0.07, 0.050, 0.0, 77.10688),
    cell(1, 0.07, 0.050, 5.0, 87.30387),
    cell(1, 0.07, 0.075, 0.0, 50.33598),
    cell(1, 0.07, 0.075, 5.0, 60.29911),
    cell(1, 0.07, 0.100, 0.0, 36.84001),
    cell(1, 0.07, 0.100, 5.0, 46.59532),
    cell(1, 0.09, 0.050, 0.0, 75.38692),
    cell(1, 0.09, 0.050, 5.0, 85.50147),
    cell(1, 0.09, 0.075, 0.0, 49.28127),
    cell(1, 0.09, 0.075, 5.0, 59.16223),
    cell(1, 0.09, 0.100, 0.0, 36.11447),
    cell(1, 0.09, 0.100, 5.0, 45.78786),
    cell(1, 0.11, 0.050, 0.0, 73.78606),
    cell(1, 0.11, 0.050, 5.0, 83.81961),
    cell(1, 0.11, 0.075, 0.0, 48.27840),
    cell(1, 0.11, 0.075, 5.0, 58.08115),
    cell(1, 0.11, 0.100, 0.0, 35.41759),
    cell(1, 0.11, 0.100, 5.0, 45.01435),
    cell(1, 0.13, 0.050, 0.0, 72.29206),
    cell(1, 0.13, 0.050, 5.0, 82.24618),
    cell(1, 0.13, 0.075, 0.0, 47.32822),
    cell(1, 0.13, 0.075, 5.0, 57.05467),
    cell(1, 0.13, 0.100, 0.0, 34.74937),
    cell(1, 0.13, 0.100, 5.0, 44.27207),
    cell(1, 0.15, 0.050, 0.0, 70.89283),
    cell(1, 0.15, 0.050, 5.0, 80.76903),
    cell(1, 0.15, 0.075, 0.0, 46.42846),
    cell(1, 0.15, 0.075, 5.0, 56.08011),
    cell(1, 0.15, 0.100, 0.0, 34.10972),
    cell(1, 0.15, 0.100, 5.0, 43.56011),
    cell(2, 0.01, 0.050, 0.0, 80.11795),
    cell(2, 0.01, 0.050, 5.0, 90.27644),
    cell(2, 0.01, 0.075, 0.0, 50.09431),
    cell(2, 0.01, 0.075, 5.0, 60.57175),
    cell(2, 0.01, 0.100, 0.0, 35.20799),
    cell(2, 0.01, 0.100, 5.0, 46.25664),
    cell(2, 0.03, 0.050, 0.0, 78.18973),
    cell(2, 0.03, 0.050, 5.0, 88.55603),
    cell(2, 0.03, 0.075, 0.0, 49.46769),
    cell(2, 0.03, 0.075, 5.0, 59.69517),
    cell(2, 0.03, 0.100, 0.0, 34.99714),
    cell(2, 0.03, 0.100, 5.0, 45.19103),
    cell(2, 0.05, 0.050, 0.0, 76.53055),
    cell(2, 0.05, 0.050, 5.0, 86.83194),
    cell(2, 0.05, 0.075, 0.0, 48.63354),
    cell(2, 0.05, 0.075, 5.0, 58.72984),
    cell(2, 0.05, 0.100, 0.0, 34.49899),
    cell(2, 0.05, 0.100, 5.0, 44.45637),
    cell(2, 0.07, 0.050, 0.0, 74.93659),
    cell(2, 0.07, 0.050, 5.0, 85.15450),
    cell(2, 0.07, 0.075, 0.0, 47.76093),
    cell(2, 0.07, 0.075, 5.0, 57.76613),
    cell(2, 0.07, 0.100, 0.0, 33.95912),
    cell(2, 0.07, 0.100, 5.0, 43.79587),
    cell(2, 0.09, 0.050, 0.0, 73.40527),
    cell(2, 0.09, 0.050, 5.0, 83.53989),
    cell(2, 0.09, 0.075, 0.0, 46.89550),
    cell(2, 0.09, 0.075, 5.0, 56.81843),
    cell(2, 0.09, 0.100, 0.0, 33.41263),
    cell(2, 0.09, 0.100, 5.0, 43.15913),
    cell(2, 0.11, 0.050, 0.0, 71.94191),
    cell(2, 0.11, 0.050, 5.0, 81.99477),
    cell(2, 0.11, 0.075, 0.0, 46.04966),
    cell(2, 0.11, 0.075, 5.0, 55.89310),
    cell(2, 0.11, 0.100, 0.0, 32.86989),
    cell(2, 0.11, 0.100, 5.0, 42.53562),
    cell(2, 0.13, 0.050, 0.0, 70.54801),
    cell(2, 0.13, 0.050, 5.0, 80.52068),
    cell(2, 0.13, 0.075, 0.0, 45.22816),
    cell(2, 0.13, 0.075, 5.0, 54.99380),
    cell(2, 0.13, 0.100, 0.0, 32.33533),
    cell(2, 0.13, 0.100, 5.0, 41.92400),
    cell(2, 0.15, 0.050, 0.0, 69.22205),
    cell(2, 0.15, 0.050, 5.0, 79.11607),
    cell(2, 0.15, 0.075, 0.0, 44.43324),
    cell(2, 0.15, 0.075, 5.0, 54.12254),
    cell(2, 0.15, 0.100, 0.0, 31.81139),
    cell(2, 0.15, 0.100, 5.0, 41.32505),
];

/// Published value at a grid point, matched to 1e-9 in k and α.
pub fn published_delta(l: u32, k: f64, alpha: f64, a: f64) -> Option<f64> {
    PUBLISHED_TABLES
        .iter()
        .find(|c| {
            c.l == l && (c.k - k).abs() < 1e-9 && (c.alpha - alpha).abs() < 1e-9 && c.a == a
        })
        .map(|c| c.delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        for l in 0..3 {
            assert_eq!(PUBLISHED_TABLES.iter().filter(|c| c.l == l).count(), 48);
        }
        assert_eq!(published_delta(0, 0.01, 0.05, 5.0), Some(96.02187));
        assert_eq!(published_delta(2, 0.15, 0.1, 5.0), Some(41.32505));
        assert_eq!(published_delta(3, 0.15, 0.1, 5.0), None);
    }
}
