use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{LimitsError, Result};
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Boson,
    Fermion,
}

/// A particle species that can hold thermal energy once it is effectively
/// massless at the ambient temperature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParticleSpecies<T> {
    pub name: String,
    /// Rest mass in kilograms; zero for massless species.
    pub mass: T,
    /// 1 for self-conjugate species, 2 when the antiparticle is distinct.
    pub particle_antiparticle_count: u32,
    pub polarizations: u32,
    pub statistics: Statistics,
}

impl<T: Scalar> ParticleSpecies<T> {
    pub fn new(
        name: impl Into<String>,
        mass: T,
        particle_antiparticle_count: u32,
        polarizations: u32,
        statistics: Statistics,
    ) -> Result<Self> {
        let species = Self {
            name: name.into(),
            mass,
            particle_antiparticle_count,
            polarizations,
            statistics,
        };
        species.validate()?;
        Ok(species)
    }

    pub fn validate(&self) -> Result<()> {
        if self.name.trim().is_empty() {
            return Err(LimitsError::InvalidArgument("species name is empty".into()));
        }
        if !(self.mass >= T::zero() && self.mass.is_finite()) {
            return Err(LimitsError::Domain {
                quantity: "species mass",
                requirement: "nonnegative and finite",
                value: self.mass.as_f64(),
            });
        }
        if !matches!(self.particle_antiparticle_count, 1 | 2) {
            return Err(LimitsError::InvalidArgument(format!(
                "species `{}`: particle/antiparticle count must be 1 or 2, got {}",
                self.name, self.particle_antiparticle_count
            )));
        }
        if self.polarizations == 0 {
            return Err(LimitsError::InvalidArgument(format!(
                "species `{}`: needs at least one polarization",
                self.name
            )));
        }
        Ok(())
    }

    pub fn photon() -> Self {
        Self {
            name: "photon".into(),
            mass: T::zero(),
            particle_antiparticle_count: 1,
            polarizations: 2,
            statistics: Statistics::Boson,
        }
    }

    /// Electrons and positrons together.
    pub fn electron() -> Self {
        Self {
            name: "electron".into(),
            mass: T::lit(9.109_383_7e-31),
            particle_antiparticle_count: 2,
            polarizations: 2,
            statistics: Statistics::Fermion,
        }
    }

    /// One massless neutrino flavor with its antineutrino, single helicity each.
    pub fn neutrino(flavor: &str) -> Self {
        Self {
            name: format!("neutrino_{flavor}"),
            mass: T::zero(),
            particle_antiparticle_count: 2,
            polarizations: 1,
            statistics: Statistics::Fermion,
        }
    }

    pub fn graviton() -> Self {
        Self {
            name: "graviton".into(),
            mass: T::zero(),
            particle_antiparticle_count: 1,
            polarizations: 2,
            statistics: Statistics::Boson,
        }
    }

    fn is_reference_photon(&self) -> bool {
        self.name == "photon"
            && self.mass == T::zero()
            && self.particle_antiparticle_count == 1
            && self.polarizations == 2
            && self.statistics == Statistics::Boson
    }
}

/// `r_ℓ` = count × polarizations × (1 for bosons, 7/8 for fermions).
pub fn effective_dof<T: Scalar>(s: &ParticleSpecies<T>) -> T {
    let base = T::from_u32(s.particle_antiparticle_count * s.polarizations).unwrap();
    match s.statistics {
        Statistics::Boson => base,
        Statistics::Fermion => base * T::lit(7.0 / 8.0),
    }
}

/// Validated list of species. Always contains the photon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeciesTable<T> {
    species: Vec<ParticleSpecies<T>>,
}

impl<T: Scalar> SpeciesTable<T> {
    pub fn new(species: Vec<ParticleSpecies<T>>) -> Result<Self> {
        if species.is_empty() {
            return Err(LimitsError::InvalidArgument("species table is empty".into()));
        }
        let mut seen = HashSet::new();
        for s in &species {
            s.validate()?;
            if !seen.insert(s.name.as_str()) {
                return Err(LimitsError::InvalidArgument(format!(
                    "duplicate species name `{}`",
                    s.name
                )));
            }
        }
        if !species.iter().any(ParticleSpecies::is_reference_photon) {
            return Err(LimitsError::InvalidArgument(
                "species table must contain the photon (massless boson, 1 particle, 2 polarizations)".into(),
            ));
        }
        Ok(Self { species })
    }

    /// Photons only, r = 2: the lower-bound entropy estimate.
    pub fn photon_only() -> Self {
        Self {
            species: vec![ParticleSpecies::photon()],
        }
    }

    pub fn species(&self) -> &[ParticleSpecies<T>] {
        &self.species
    }

    pub fn len(&self) -> usize {
        self.species.len()
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty()
    }

    /// Σ r_ℓ over the species at `indices`.
    pub fn r_of(&self, indices: &[usize]) -> T {
        indices
            .iter()
            .fold(T::zero(), |acc, &i| acc + effective_dof(&self.species[i]))
    }

    pub fn names_of(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.species[i].name.clone()).collect()
    }
}

impl<T: Scalar> Default for SpeciesTable<T> {
    fn default() -> Self {
        Self::photon_only()
    }
}

impl<'de, T: Scalar> Deserialize<'de> for SpeciesTable<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(bound = "T: Scalar")]
        struct Raw<T> {
            species: Vec<ParticleSpecies<T>>,
        }
        let raw = Raw::<T>::deserialize(d)?;
        SpeciesTable::new(raw.species).map_err(serde::de::Error::custom)
    }
}
