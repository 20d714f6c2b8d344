//! Output formatting: human-readable text or line-oriented `key value`
//! records for diffing.

use clap::ValueEnum;
use cykit::exact::rat::Rat;
use cykit::exact::series::PowerSeries;
use cykit::opalg::ThetaOperator;
use cykit::textio::{render_machine, render_theta};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

pub struct Printer {
    format: Format,
}

impl Printer {
    pub fn new(format: Format) -> Self {
        Printer { format }
    }

    pub fn is_machine(&self) -> bool {
        self.format == Format::Machine
    }

    pub fn kv(&self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Text => println!("{}: {}", key, value),
            Format::Machine => println!("{} {}", key, value),
        }
    }

    pub fn line(&self, text: &str) {
        println!("{}", text);
    }

    pub fn operator(&self, key: &str, l: &ThetaOperator) {
        match self.format {
            Format::Text => println!("{}: {}", key, render_theta(l)),
            Format::Machine => {
                println!("{} begin", key);
                print!("{}", render_machine(l));
                println!("{} end", key);
            }
        }
    }

    pub fn series(&self, key: &str, s: &PowerSeries) {
        match self.format {
            Format::Text => println!("{}: {}", key, s),
            Format::Machine => {
                for (e, c) in s.coeffs().iter().enumerate() {
                    println!("{} {} {}", key, e, c);
                }
            }
        }
    }

    pub fn coeff_list(&self, key: &str, start: usize, values: &[Rat]) {
        for (i, v) in values.iter().enumerate() {
            match self.format {
                Format::Text => println!("{}[{}] = {}", key, start + i, v),
                Format::Machine => println!("{} {} {}", key, start + i, v),
            }
        }
    }
}
