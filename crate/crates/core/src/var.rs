//! Variable universe, charts and form basis axes.
//!
//! The fixed ordered universe is `x > y > yp > alpha > u > s` (yp prints as
//! `y'`). Chart A carries the coordinates `(x, y, yp)` and chart B the
//! coordinates `(x, y, u)` with `s = sqrt(4y^3 + u)` adjoined; `alpha` may
//! appear in either chart.

use serde::{Deserialize, Serialize};

pub const NVARS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    X = 0,
    Y = 1,
    Yp = 2,
    Alpha = 3,
    U = 4,
    S = 5,
}

pub const ALL_VARS: [Var; NVARS] = [Var::X, Var::Y, Var::Yp, Var::Alpha, Var::U, Var::S];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Yp => "y'",
            Var::Alpha => "alpha",
            Var::U => "u",
            Var::S => "s",
        }
    }

    /// Sigma-weight of the coordinate function.
    pub fn weight(self) -> i64 {
        match self {
            Var::X => 1,
            Var::Y => -2,
            Var::Yp => -3,
            Var::Alpha => -1,
            Var::U => -6,
            Var::S => -3,
        }
    }

    /// Laurent (negative) exponents are permitted only for yp, u, alpha.
    pub fn laurent_allowed(self) -> bool {
        matches!(self, Var::Yp | Var::U | Var::Alpha)
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "y'" | "yp" => Some(Var::Yp),
            "alpha" => Some(Var::Alpha),
            "u" => Some(Var::U),
            "s" => Some(Var::S),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChartTag {
    A,
    B,
}

impl ChartTag {
    /// Coordinate variables of the chart (alpha last, s excluded: s is a
    /// dependent symbol in chart B).
    pub fn coords(self) -> &'static [Var] {
        match self {
            ChartTag::A => &[Var::X, Var::Y, Var::Yp, Var::Alpha],
            ChartTag::B => &[Var::X, Var::Y, Var::U, Var::Alpha],
        }
    }

    /// All symbols allowed to appear in an expression of this chart.
    pub fn allows(self, v: Var) -> bool {
        match self {
            ChartTag::A => matches!(v, Var::X | Var::Y | Var::Yp | Var::Alpha),
            ChartTag::B => matches!(v, Var::X | Var::Y | Var::U | Var::Alpha | Var::S),
        }
    }
}

/// Basis 1-forms. Blades index into this list; `Dyp` only occurs in chart A
/// and `Du` only in chart B, so a blade is a subset of 4 axes per chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    Dx = 0,
    Dy = 1,
    D3 = 2,
    Dalpha = 3,
}

pub const NAXES: usize = 4;

impl Axis {
    pub fn name(self, chart: ChartTag) -> &'static str {
        match self {
            Axis::Dx => "dx",
            Axis::Dy => "dy",
            Axis::D3 => match chart {
                ChartTag::A => "dy'",
                ChartTag::B => "du",
            },
            Axis::Dalpha => "dalpha",
        }
    }

    /// The coordinate the axis differentiates.
    pub fn coord(self, chart: ChartTag) -> Var {
        match self {
            Axis::Dx => Var::X,
            Axis::Dy => Var::Y,
            Axis::D3 => match chart {
                ChartTag::A => Var::Yp,
                ChartTag::B => Var::U,
            },
            Axis::Dalpha => Var::Alpha,
        }
    }

    pub fn of_coord(v: Var, chart: ChartTag) -> Option<Axis> {
        match (v, chart) {
            (Var::X, _) => Some(Axis::Dx),
            (Var::Y, _) => Some(Axis::Dy),
            (Var::Yp, ChartTag::A) => Some(Axis::D3),
            (Var::U, ChartTag::B) => Some(Axis::D3),
            (Var::Alpha, _) => Some(Axis::Dalpha),
            _ => None,
        }
    }

    /// Sigma-weight of the basis 1-form: dx:+1, dy:-2, dy':-3, du:-6, dalpha:-1.
    pub fn weight(self, chart: ChartTag) -> i64 {
        self.coord(chart).weight()
    }

    pub fn from_index(i: usize) -> Axis {
        match i {
            0 => Axis::Dx,
            1 => Axis::Dy,
            2 => Axis::D3,
            3 => Axis::Dalpha,
            _ => unreachable!("axis index {i}"),
        }
    }
}
