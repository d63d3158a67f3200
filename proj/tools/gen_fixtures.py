#!/usr/bin/env python3
"""Regenerates the tabulated material fixtures under data/fixtures/.

Rows for closed-form curves (thermal strain, conductivity) are sampled every
10 C from the Eurocode expressions; piecewise-linear curves are written at
their breakpoints only.  Concrete rows are cross-checked against the
normal-weight concrete tables of EN 1994-1-2, steel rows against EN 1993-1-2.
"""
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"


def write(name, header, rows, note):
    lines = [f"# {note}", header]
    for t, v in rows:
        lines.append(f"{t:g}\t{v:.10g}")
    (OUT / f"{name}.tsv").write_text("\n".join(lines) + "\n")


def grid(lo=20, hi=1200, step=10):
    ts = [lo] + list(range(30, hi + 1, step))
    return ts


def eps_th_siliceous(t):
    if t <= 20:
        return 0.0
    if t <= 700:
        # The cubic ends 9e-6 above the plateau; capped so the curve stays monotonic.
        return min(-1.8e-4 + 9e-6 * t + 2.3e-11 * t ** 3, 14e-3)
    return 14e-3


def eps_th_calcareous(t):
    if t <= 20:
        return 0.0
    if t <= 805:
        return min(-1.2e-4 + 6e-6 * t + 1.4e-11 * t ** 3, 12e-3)
    return 12e-3


def eps_th_steel(t):
    if t <= 20:
        return 0.0
    if t <= 750:
        return -2.416e-4 + 1.2e-5 * t + 0.4e-8 * t ** 2
    if t <= 860:
        return 11e-3
    return -6.2e-3 + 2e-5 * t


def k_lower(t):
    r = t / 100.0
    return 1.36 - 0.136 * r + 0.0057 * r * r


def k_upper(t):
    r = t / 100.0
    return 2.0 - 0.2451 * r + 0.0107 * r * r


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    src = "EN 1992-1-2"

    temps = [20, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000, 1100, 1200]
    kc_sil = [1.00, 1.00, 0.95, 0.85, 0.75, 0.60, 0.45, 0.30, 0.15, 0.08, 0.04, 0.01, 0.00]
    kc_cal = [1.00, 1.00, 0.97, 0.91, 0.85, 0.74, 0.60, 0.43, 0.27, 0.15, 0.06, 0.02, 0.00]
    ec1 = [0.0025, 0.0040, 0.0055, 0.0070, 0.0100, 0.0150, 0.0250, 0.0250, 0.0250,
           0.0250, 0.0250, 0.0250, 0.0250]
    # The 1200 C ultimate strain is not tabulated (strength is zero there); the
    # 0.0025 per 100 C increment of the rows above is continued.
    ecu1 = [0.0200, 0.0225, 0.0250, 0.0275, 0.0300, 0.0325, 0.0350, 0.0375, 0.0400,
            0.0425, 0.0450, 0.0475, 0.0500]
    write("concrete_strength_siliceous", "temperature_C\tk_c_-", zip(temps, kc_sil),
          f"{src} Table 3.1 col 2: f_c,T / f_ck, siliceous aggregate")
    write("concrete_strength_calcareous", "temperature_C\tk_c_-", zip(temps, kc_cal),
          f"{src} Table 3.1 col 5: f_c,T / f_ck, calcareous aggregate")
    write("concrete_peak_strain", "temperature_C\teps_c1_-", zip(temps, ec1),
          f"{src} Table 3.1 col 3: strain at peak stress")
    write("concrete_ultimate_strain", "temperature_C\teps_cu1_-", zip(temps, ecu1),
          f"{src} Table 3.1 col 4: end of the descending branch")

    g = grid()
    write("concrete_thermal_strain_siliceous", "temperature_C\teps_th_-",
          [(t, eps_th_siliceous(t)) for t in g],
          f"{src} 3.3.1 (3.3a), sampled every 10 C, anchored to 0 at 20 C")
    write("concrete_thermal_strain_calcareous", "temperature_C\teps_th_-",
          [(t, eps_th_calcareous(t)) for t in g],
          f"{src} 3.3.1 (3.3b), sampled every 10 C, anchored to 0 at 20 C")
    write("concrete_conductivity_lower", "temperature_C\tlambda_W/mK",
          [(t, k_lower(t)) for t in g], f"{src} 3.3.3 (3.8), lower limit")
    write("concrete_conductivity_upper", "temperature_C\tlambda_W/mK",
          [(t, k_upper(t)) for t in g], f"{src} 3.3.3 (3.7), upper limit")
    write("concrete_specific_heat_dry", "temperature_C\tc_p_J/kgK",
          [(20, 900), (100, 900), (200, 1000), (400, 1100), (1200, 1100)],
          f"{src} 3.3.2 (3.6a), dry concrete")
    # Peak value held between 100 and 115 C then linear back to the dry curve at
    # 200 C.  The 4 % row interpolates between the 3 % and 10 % values of the note.
    write("concrete_specific_heat_peak", "moisture_pct\tc_p_peak_J/kgK",
          [(0.0, 900), (1.5, 1470), (3.0, 2020), (4.0, 2020 + (5600 - 2020) / 7.0)],
          f"{src} 3.3.2 (3.6b) moisture peak by moisture content")
    write("concrete_density_ratio", "temperature_C\trho_ratio_-",
          [(20, 1.0), (115, 1.0), (200, 0.98), (400, 0.95), (1200, 0.88)],
          f"{src} 3.3.2 (3): rho(T) / rho(20 C)")

    ky = [1.00, 1.00, 1.00, 1.00, 1.00, 0.78, 0.47, 0.23, 0.11, 0.06, 0.04, 0.02, 0.00]
    kp = [1.00, 1.00, 0.81, 0.61, 0.42, 0.36, 0.18, 0.07, 0.05, 0.04, 0.02, 0.01, 0.00]
    ke = [1.00, 1.00, 0.90, 0.80, 0.70, 0.60, 0.31, 0.13, 0.09, 0.07, 0.04, 0.02, 0.00]
    write("steel_yield_reduction", "temperature_C\tk_y_-", zip(temps, ky),
          f"{src} Table 3.2a class N hot rolled: f_sy,T / f_yk")
    write("steel_proportional_reduction", "temperature_C\tk_p_-", zip(temps, kp),
          f"{src} Table 3.2a class N hot rolled: f_sp,T / f_yk")
    write("steel_modulus_reduction", "temperature_C\tk_E_-", zip(temps, ke),
          f"{src} Table 3.2a class N hot rolled: E_s,T / E_s")
    write("steel_thermal_strain", "temperature_C\teps_th_-",
          [(t, eps_th_steel(t)) for t in g],
          f"{src} 3.4 (3.9), sampled every 10 C, anchored to 0 at 20 C")


if __name__ == "__main__":
    main()
