"""Simulated finite-sample moments for the panel unit-root tests.

Generated by tools/gen_panel_moments.py — do not edit by hand.
POOLED_ADJUSTMENTS[model] rows: (t_tilde, mu_star, sigma_star).
GROUP_MOMENTS[model][p] rows: (n_obs, mean_t, var_t).
Master seed: 20260402; quick mode: False.
"""

POOLED_ADJUSTMENTS = {
    'none': ((18, 0.00918, 1.11273),
        (22, 0.00567, 1.08607),
        (26, 0.00368, 1.07005),
        (30, 0.00335, 1.05833),
        (38, 0.00204, 1.04500),
        (46, 0.00362, 1.03748),
        (56, 0.00278, 1.03076),
        (70, 0.00072, 1.02311),
        (90, 0.00133, 1.01786),
        (120, 0.00060, 1.01129),
        (160, 0.00185, 1.01185),
        (220, -0.00221, 1.00318),
        (320, 0.00113, 1.00681),
        (500, -0.00037, 1.00485),
        (1000, 0.00115, 1.00083)),
    'constant': ((18, -0.73091, 1.00529),
        (22, -0.70274, 0.96125),
        (26, -0.66620, 0.92522),
        (30, -0.65621, 0.90484),
        (38, -0.61915, 0.86909),
        (46, -0.60563, 0.84748),
        (56, -0.59198, 0.82722),
        (70, -0.57790, 0.80863),
        (90, -0.56375, 0.79174),
        (120, -0.54943, 0.77023),
        (160, -0.54143, 0.76040),
        (220, -0.53223, 0.74676),
        (320, -0.52393, 0.73880),
        (500, -0.51840, 0.72954),
        (1000, -0.51160, 0.72219)),
    'trend': ((18, -0.72062, 1.19100),
        (22, -0.69433, 1.09781),
        (26, -0.66143, 1.01789),
        (30, -0.65151, 0.97586),
        (38, -0.61573, 0.88680),
        (46, -0.60328, 0.84152),
        (56, -0.59114, 0.80086),
        (70, -0.57595, 0.75933),
        (90, -0.56236, 0.71466),
        (120, -0.54905, 0.67314),
        (160, -0.54063, 0.64472),
        (220, -0.53258, 0.61626),
        (320, -0.52424, 0.58984),
        (500, -0.51846, 0.56746),
        (1000, -0.51127, 0.54160)),
}

GROUP_MOMENTS = {
    'constant': {
        0: ((15, -1.51660, 0.91599),
            (18, -1.51799, 0.87022),
            (22, -1.51876, 0.84233),
            (26, -1.51953, 0.81301),
            (30, -1.52047, 0.79779),
            (38, -1.52380, 0.77807),
            (46, -1.52591, 0.76561),
            (56, -1.52656, 0.75399),
            (70, -1.53218, 0.74063),
            (90, -1.52744, 0.73483),
            (120, -1.52906, 0.72295),
            (160, -1.52926, 0.71699),
            (220, -1.53258, 0.71433),
            (320, -1.52935, 0.72112),
            (500, -1.53128, 0.70837),
            (1000, -1.53515, 0.70797)),
        1: ((15, -1.50135, 1.00170),
            (18, -1.50611, 0.94149),
            (22, -1.51122, 0.89011),
            (26, -1.51560, 0.85677),
            (30, -1.51560, 0.83346),
            (38, -1.52067, 0.80397),
            (46, -1.52215, 0.78539),
            (56, -1.52416, 0.77293),
            (70, -1.52764, 0.75858),
            (90, -1.52571, 0.74215),
            (120, -1.52924, 0.73537),
            (160, -1.52779, 0.73072),
            (220, -1.52754, 0.72440),
            (320, -1.53363, 0.71753),
            (500, -1.53433, 0.71603),
            (1000, -1.53206, 0.70529)),
        2: ((15, -1.38707, 1.08124),
            (18, -1.41081, 1.00482),
            (22, -1.42959, 0.94027),
            (26, -1.44682, 0.90138),
            (30, -1.45942, 0.87056),
            (38, -1.47315, 0.83450),
            (46, -1.48410, 0.80808),
            (56, -1.49085, 0.79226),
            (70, -1.50142, 0.77355),
            (90, -1.50528, 0.75472),
            (120, -1.51399, 0.74649),
            (160, -1.52222, 0.73156),
            (220, -1.52508, 0.72912),
            (320, -1.52841, 0.72257),
            (500, -1.53186, 0.70688),
            (1000, -1.53436, 0.70572)),
        3: ((15, -1.36740, 1.18687),
            (18, -1.39189, 1.07901),
            (22, -1.41764, 0.99859),
            (26, -1.43498, 0.94953),
            (30, -1.45055, 0.91058),
            (38, -1.46753, 0.85991),
            (46, -1.47823, 0.83028),
            (56, -1.48967, 0.80912),
            (70, -1.50021, 0.78691),
            (90, -1.50246, 0.76639),
            (120, -1.51044, 0.75777),
            (160, -1.51785, 0.74509),
            (220, -1.52177, 0.72794),
            (320, -1.52412, 0.72344),
            (500, -1.52551, 0.71998),
            (1000, -1.52905, 0.71489)),
        4: ((15, -1.25995, 1.28644),
            (18, -1.30307, 1.15347),
            (22, -1.34196, 1.05639),
            (26, -1.37291, 0.98922),
            (30, -1.39380, 0.95213),
            (38, -1.42316, 0.89321),
            (46, -1.44284, 0.85588),
            (56, -1.45799, 0.82822),
            (70, -1.47436, 0.80622),
            (90, -1.48601, 0.78075),
            (120, -1.50064, 0.76023),
            (160, -1.50959, 0.74324),
            (220, -1.51276, 0.73384),
            (320, -1.52039, 0.72683),
            (500, -1.52318, 0.71592),
            (1000, -1.53026, 0.71225)),
    },
    'trend': {
        0: ((15, -2.16549, 0.86401),
            (18, -2.16853, 0.79884),
            (22, -2.16795, 0.74659),
            (26, -2.17131, 0.71093),
            (30, -2.17157, 0.68834),
            (38, -2.17428, 0.66128),
            (46, -2.17407, 0.64192),
            (56, -2.17488, 0.62563),
            (70, -2.17693, 0.61064),
            (90, -2.17842, 0.59805),
            (120, -2.18072, 0.58907),
            (160, -2.18067, 0.58639),
            (220, -2.18229, 0.57889),
            (320, -2.18053, 0.57178),
            (500, -2.18141, 0.56597),
            (1000, -2.17944, 0.56648)),
        1: ((15, -2.16562, 0.98611),
            (18, -2.16562, 0.88014),
            (22, -2.17061, 0.80630),
            (26, -2.17338, 0.76095),
            (30, -2.17234, 0.72906),
            (38, -2.17639, 0.68719),
            (46, -2.17721, 0.65903),
            (56, -2.17533, 0.64623),
            (70, -2.17770, 0.62565),
            (90, -2.17734, 0.61164),
            (120, -2.17797, 0.60018),
            (160, -2.18139, 0.58407),
            (220, -2.18338, 0.58047),
            (320, -2.17889, 0.57326),
            (500, -2.18536, 0.57154),
            (1000, -2.18247, 0.56675)),
        2: ((15, -1.99971, 1.04691),
            (18, -2.03079, 0.93171),
            (22, -2.06077, 0.84216),
            (26, -2.08182, 0.78791),
            (30, -2.09703, 0.75257),
            (38, -2.11613, 0.70754),
            (46, -2.12761, 0.67572),
            (56, -2.13895, 0.65304),
            (70, -2.14530, 0.63331),
            (90, -2.15778, 0.61782),
            (120, -2.15807, 0.60320),
            (160, -2.16220, 0.59125),
            (220, -2.17026, 0.58617),
            (320, -2.17401, 0.57959),
            (500, -2.18040, 0.57319),
            (1000, -2.17757, 0.56833)),
        3: ((15, -1.97723, 1.22792),
            (18, -2.01469, 1.04904),
            (22, -2.05064, 0.92790),
            (26, -2.07208, 0.85328),
            (30, -2.08924, 0.80236),
            (38, -2.11250, 0.74238),
            (46, -2.12671, 0.70618),
            (56, -2.13603, 0.67178),
            (70, -2.14600, 0.64915),
            (90, -2.15573, 0.62629),
            (120, -2.16366, 0.60665),
            (160, -2.16646, 0.59747),
            (220, -2.17036, 0.57948),
            (320, -2.17529, 0.57685),
            (500, -2.17649, 0.56865),
            (1000, -2.18013, 0.57076)),
        4: ((15, -1.81924, 1.33970),
            (18, -1.88192, 1.13403),
            (22, -1.94004, 0.98495),
            (26, -1.98150, 0.89999),
            (30, -2.01108, 0.84022),
            (38, -2.05073, 0.76751),
            (46, -2.07555, 0.72556),
            (56, -2.09660, 0.69193),
            (70, -2.11413, 0.66400),
            (90, -2.12791, 0.63669),
            (120, -2.14266, 0.61592),
            (160, -2.15235, 0.60392),
            (220, -2.16081, 0.58634),
            (320, -2.16739, 0.57904),
            (500, -2.17008, 0.56973),
            (1000, -2.17224, 0.56954)),
    },
}
