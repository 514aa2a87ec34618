//! serde adapters: complex scalars travel as `[re, im]` arrays so JSON
//! payloads round-trip bit-exactly through the shortest-float encoder.

pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(c: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        (c.re, c.im).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let (re, im) = <(f64, f64)>::deserialize(de)?;
        Ok(Complex64::new(re, im))
    }
}

pub mod complex_vec {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], ser: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|c| (c.re, c.im)).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<(f64, f64)>::deserialize(de)?;
        Ok(pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
    }
}

pub mod complex_mat {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Complex64>], ser: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|row| row.iter().map(|c| (c.re, c.im)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Vec<Complex64>>, D::Error> {
        let rows = Vec::<Vec<(f64, f64)>>::deserialize(de)?;
        Ok(rows
            .into_iter()
            .map(|row| row.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
            .collect())
    }
}

pub mod complex_mat_opt {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        m: &Option<Vec<Vec<Complex64>>>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        m.as_ref()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|c| (c.re, c.im)).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<Option<Vec<Vec<Complex64>>>, D::Error> {
        let rows = Option::<Vec<Vec<(f64, f64)>>>::deserialize(de)?;
        Ok(rows.map(|rows| {
            rows.into_iter()
                .map(|row| row.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
                .collect()
        }))
    }
}
