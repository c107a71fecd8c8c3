//! A bundled gallery of five showcase parameter sets ("table 1") that
//! exercise the full parameter box: mixed-sign tilts, offsets from 0.59 to
//! 0.93, and slice parameters from nearly central to strongly off-center.
//! The export command renders each row's region boundary for both the
//! parent class and the ODE-defined family.

use crate::error::Result;
use crate::kernels::ClassParams;
use crate::Cx;

/// One gallery row: a complete problem instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    /// 1-based row number used in exported file names.
    pub index: usize,
    pub z0: Cx,
    pub lambda: Cx,
    pub beta: f64,
    pub gamma: f64,
}

impl Table1Row {
    pub fn class_params(&self) -> Result<ClassParams> {
        ClassParams::new(self.gamma, self.beta, self.lambda, self.z0)
    }
}

/// The five gallery rows.
pub fn rows() -> [Table1Row; 5] {
    [
        Table1Row {
            index: 1,
            z0: Cx::new(0.335192, -0.787333),
            lambda: Cx::new(0.0737292, 0.466706),
            beta: 0.591244,
            gamma: 0.383292,
        },
        Table1Row {
            index: 2,
            z0: Cx::new(-0.261209, 0.926935),
            lambda: Cx::new(-0.28588, 0.307498),
            beta: 0.700318,
            gamma: -0.87825,
        },
        Table1Row {
            index: 3,
            z0: Cx::new(-0.41227, -0.521734),
            lambda: Cx::new(-0.0875648, 0.0714166),
            beta: 0.602203,
            gamma: 0.910581,
        },
        Table1Row {
            index: 4,
            z0: Cx::new(0.771264, 0.151204),
            lambda: Cx::new(-0.391149, -0.294747),
            beta: 0.928608,
            gamma: 1.55854,
        },
        Table1Row {
            index: 5,
            z0: Cx::new(0.335626, 0.929093),
            lambda: Cx::new(0.00010443, 0.0255256),
            beta: 0.76622,
            gamma: 1.5449,
        },
    ]
}
