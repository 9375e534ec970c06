//! Literal labelings of the published small instances, transcribed in
//! canonical vertex order `(1,1), (2,1), (1,2), (2,2), ...`.

use crate::graph::{Family, FamilySpec};
use crate::srdf::Labeling;

#[derive(Debug, Clone, Copy)]
pub struct FigureLabeling {
    pub name: &'static str,
    pub family: Family,
    pub n: usize,
    pub values: &'static [i64],
    /// Weight printed alongside the figure.
    pub stated_weight: i64,
}

impl FigureLabeling {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec {
            family: self.family,
            n: self.n,
        }
    }

    pub fn labeling(&self) -> Labeling {
        Labeling::from_values(self.values).expect("figure labels are in {-1, 1, 2}")
    }
}

pub const LADDER_2: FigureLabeling = FigureLabeling {
    name: "ladder-2",
    family: Family::Ladder,
    n: 2,
    values: &[-1, 1, 2, 1],
    stated_weight: 3,
};

pub const LADDER_3: FigureLabeling = FigureLabeling {
    name: "ladder-3",
    family: Family::Ladder,
    n: 3,
    values: &[-1, 1, 2, 1, -1, 1],
    stated_weight: 3,
};

pub const LADDER_4: FigureLabeling = FigureLabeling {
    name: "ladder-4",
    family: Family::Ladder,
    n: 4,
    values: &[-1, 1, 2, 1, -1, -1, 1, 2],
    stated_weight: 4,
};

pub const LADDER_5: FigureLabeling = FigureLabeling {
    name: "ladder-5",
    family: Family::Ladder,
    n: 5,
    values: &[-1, 1, 2, 1, -1, -1, 1, 2, 1, -1],
    stated_weight: 4,
};

/// The worked `LG_6` example drawn after the ladder construction.
pub const LADDER_6: FigureLabeling = FigureLabeling {
    name: "ladder-6",
    family: Family::Ladder,
    n: 6,
    values: &[-1, 1, 2, 1, -1, -1, 1, 2, -1, -1, 2, 1],
    stated_weight: 5,
};

pub const LADDER_COMPLEMENT_2: FigureLabeling = FigureLabeling {
    name: "ladder-complement-2",
    family: Family::LadderComplement,
    n: 2,
    values: &[2, 2, -1, -1],
    stated_weight: 2,
};

/// As drawn, vertex (2,1) has closed-neighborhood sum 0, so this labeling is
/// not valid. See [`LADDER_COMPLEMENT_3_REPAIRED`].
pub const LADDER_COMPLEMENT_3: FigureLabeling = FigureLabeling {
    name: "ladder-complement-3",
    family: Family::LadderComplement,
    n: 3,
    values: &[2, 1, 1, 1, -1, -1],
    stated_weight: 3,
};

/// [`LADDER_COMPLEMENT_3`] with the labels of (2,2) and (1,3) exchanged: the nearest
/// valid labeling of the stated weight.
pub const LADDER_COMPLEMENT_3_REPAIRED: FigureLabeling = FigureLabeling {
    name: "ladder-complement-3-repaired",
    family: Family::LadderComplement,
    n: 3,
    values: &[2, 1, 1, -1, 1, -1],
    stated_weight: 3,
};

pub const CIRCULAR_LADDER_5: FigureLabeling = FigureLabeling {
    name: "circular-ladder-5",
    family: Family::CircularLadder,
    n: 5,
    values: &[1, 1, -1, -1, 2, 2, -1, -1, 1, 1],
    stated_weight: 4,
};

pub const CIRCULAR_LADDER_COMPLEMENT_3: FigureLabeling = FigureLabeling {
    name: "circular-ladder-complement-3",
    family: Family::CircularLadderComplement,
    n: 3,
    values: &[1, 2, -1, -1, 2, 1],
    stated_weight: 4,
};

pub const CIRCULAR_LADDER_COMPLEMENT_4: FigureLabeling = FigureLabeling {
    name: "circular-ladder-complement-4",
    family: Family::CircularLadderComplement,
    n: 4,
    values: &[1, 2, -1, 1, -1, -1, 2, 1],
    stated_weight: 4,
};

/// Ladder labelings in order `n = 2..=5`.
pub const LADDERS: [FigureLabeling; 4] = [LADDER_2, LADDER_3, LADDER_4, LADDER_5];

/// The small-instance figures for complements and the exceptional circular
/// ladder, as drawn.
pub const SMALL_CASES: [FigureLabeling; 5] = [
    LADDER_COMPLEMENT_2,
    LADDER_COMPLEMENT_3,
    CIRCULAR_LADDER_5,
    CIRCULAR_LADDER_COMPLEMENT_3,
    CIRCULAR_LADDER_COMPLEMENT_4,
];
