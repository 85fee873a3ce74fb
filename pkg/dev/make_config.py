"""Module for package config building."""

import json


def oracle(hard_limit, bound):
    """Make brute-force oracle settings."""
    return {
        'ORACLE_HARD_LIMIT': hard_limit,
        'ORACLE_BOUND': bound,
    }


def crosscheck(n_max, order, series_k_max, closed_form_n_max):
    """Make verification suite sizes."""
    return {
        'N_MAX': n_max,
        'ORDER': order,
        'SERIES_K_MAX': series_k_max,
        'CLOSED_FORM_N_MAX': closed_form_n_max,
    }


def determinants(h_max, reference_h_max, bordered_n_max, tau_i_max):
    """Make determinant check sizes."""
    return {
        'DET_H_MAX': h_max,
        'REFERENCE_DET_H_MAX': reference_h_max,
        'BORDERED_N_MAX': bordered_n_max,
        'TAU_I_MAX': tau_i_max,
    }


def cramer(order, i_max, margin):
    """Make Cramer quotient stabilization settings."""
    return {
        'CRAMER_ORDER': order,
        'CRAMER_I_MAX': i_max,
        'CRAMER_MARGIN': margin,
    }


def binet(gw_k_max, poly_i_max, t_values, h_max, tolerance, vieta_tolerance):
    """Make Binet formula check settings."""
    return {
        'GW_K_MAX': gw_k_max,
        'BINET_POLY_I_MAX': poly_i_max,
        'BINET_T_VALUES': t_values,
        'BINET_H_MAX': h_max,
        'BINET_TOLERANCE': tolerance,
        'VIETA_TOLERANCE': vieta_tolerance,
    }


def oeis(seq_id, cache_dir, url):
    """Make b-file cache settings."""
    return {
        'SEQ_ID': seq_id,
        'CACHE_DIR': cache_dir,
        'BFILE_URL': url,
    }


# Create JSON config
with open('../SMotzkin/config.json', 'w') as f:
    data = {}
    data.update(oracle(16, 14))
    data.update(crosscheck(60, 30, 10, 120))
    data.update(determinants(10, 6, 9, 30))
    data.update(cramer(30, 5, 5))
    data.update(binet(40, 15, [0.1, 0.2, 0.3], 20, 1e-8, 1e-12))
    data.update(oeis('A001764', '~/.cache/smotzkin', 'https://oeis.org/{seq_id}/b{number}.txt'))
    json.dump(data, f, indent=2)
    f.write('\n')
