"""Simulated finite-sample quantile response surfaces for tau statistics.

Generated by tools/gen_mackinnon_surfaces.py — do not edit by hand.
Evaluate a node quantile as
    q_p(n) = c[0] + c[1]/n + c[2]/n**2 + c[3]/n**3
with n clamped below at N_MIN[spec][dim] (the smallest simulated size).
Master seed: 20260401; quick mode: False.
"""

P_NODES = (0.0001, 0.0002, 0.0003, 0.0005, 0.0008, 0.0012, 0.0018, 0.0027, 0.004, 0.006, 0.009, 0.0135, 0.02, 0.03, 0.045, 0.065, 0.09, 0.125, 0.17, 0.22, 0.28, 0.35, 0.43, 0.5, 0.57, 0.65, 0.73, 0.8, 0.86, 0.91, 0.95, 0.975, 0.99, 0.9965, 0.999, 0.9999)

SURFACES = {
    'none': {
        1: ((-3.797114, -22.254776, 293.660991, -3107.057889),
         (-3.697583, -11.516416, 20.554136, -501.495424),
         (-3.621016, -7.274093, -93.536344, 777.005522),
         (-3.484457, -5.920075, -95.608553, 801.459563),
         (-3.338954, -8.343748, 32.151510, -396.198367),
         (-3.237400, -6.255509, -3.987842, -29.921893),
         (-3.119503, -5.327973, -6.716730, 4.533575),
         (-2.990238, -5.548120, 36.657664, -476.175290),
         (-2.870713, -4.530876, 30.424894, -398.312256),
         (-2.739672, -3.331124, 10.894837, -199.109811),
         (-2.602984, -2.523193, 2.959199, -92.886223),
         (-2.458632, -2.014741, 5.879592, -109.533547),
         (-2.310297, -1.626902, 6.331744, -78.102131),
         (-2.150964, -1.190535, 7.521161, -65.658443),
         (-1.984758, -0.402063, -4.846766, 54.857708),
         (-1.822492, -0.066229, -3.410940, 34.564528),
         (-1.668535, 0.251812, -6.263060, 65.506779),
         (-1.498019, 0.099426, 6.468216, -67.108269),
         (-1.328449, 0.206113, 8.559468, -85.367562),
         (-1.173432, 0.499650, -0.284946, 14.775355),
         (-1.012000, 0.400642, 6.054088, -54.047474),
         (-0.844670, 0.484884, 2.773947, -14.420856),
         (-0.663536, 0.520221, 3.482472, -37.739974),
         (-0.500065, 0.550195, 4.101049, -37.751857),
         (-0.320089, 0.547926, 4.346688, -30.681171),
         (-0.097620, 0.571608, 5.751448, -54.459701),
         (0.152845, 0.497611, 7.331628, -65.012835),
         (0.405252, 0.418312, 10.264546, -88.266263),
         (0.667170, 0.633082, 4.011625, -13.974435),
         (0.950336, 0.955288, 0.570889, 20.183378),
         (1.279810, 1.379401, -1.418292, 48.688138),
         (1.623120, 1.316176, 25.381203, -226.034126),
         (2.010901, 2.534508, 22.658762, -143.642962),
         (2.391312, 5.253028, -12.792466, 302.445127),
         (2.811109, 6.586426, 19.318902, 151.313448),
         (3.439307, 14.302719, -106.998623, 2382.574131)),
        2: ((-4.592666, -20.282755, -16.770456, -897.404573),
         (-4.427442, -17.791412, -10.016777, -737.891180),
         (-4.331006, -16.533499, -21.642007, -438.445932),
         (-4.192008, -15.993263, 12.788127, -582.865251),
         (-4.086915, -10.204439, -169.705534, 1537.562143),
         (-3.982957, -8.226225, -187.072883, 1669.970887),
         (-3.865215, -8.438263, -139.309149, 1298.011970),
         (-3.744079, -8.775218, -78.447663, 736.125963),
         (-3.632705, -7.502335, -66.054862, 482.461179),
         (-3.510134, -6.492214, -56.582045, 398.616841),
         (-3.379574, -6.175074, -23.768946, 75.996678),
         (-3.248492, -5.096190, -21.116641, 63.389047),
         (-3.111197, -4.722303, -2.331738, -54.668286),
         (-2.967088, -3.526108, -10.616134, 37.779703),
         (-2.807855, -2.925446, -3.217644, -13.315975),
         (-2.652281, -2.234279, -9.060328, 87.451779),
         (-2.509084, -1.556451, -10.437798, 91.100541),
         (-2.350752, -1.102592, -8.150427, 82.278903),
         (-2.189466, -0.729006, -5.897369, 71.665607),
         (-2.041507, -0.654361, 5.035667, -46.112737),
         (-1.890772, -0.299951, 4.096220, -52.770215),
         (-1.736080, 0.290216, -10.454914, 106.994182),
         (-1.572627, 0.586284, -14.661638, 152.019712),
         (-1.433923, 0.692472, -14.126871, 136.728532),
         (-1.293854, 0.667122, -11.275590, 104.696932),
         (-1.126611, 0.688042, -11.285319, 100.420854),
         (-0.936956, 0.511256, -7.203720, 61.212332),
         (-0.733754, 0.265533, -0.021517, -21.577117),
         (-0.497541, 0.222512, -1.066361, -10.050951),
         (-0.208699, 0.701181, -16.785549, 155.567333),
         (0.162813, 0.457669, -2.700669, 16.272280),
         (0.557430, 0.743013, 0.180807, -43.321840),
         (1.013128, 2.423883, -30.877768, 198.013704),
         (1.499117, 1.451465, 16.411179, -97.107161),
         (1.996661, -0.889294, 169.470272, -1670.732035),
         (2.699956, 12.866824, -317.796680, 4329.237629)),
        3: ((-4.980330, -36.091464, 266.101029, -4177.615130),
         (-4.823508, -32.584578, 214.446020, -3168.913882),
         (-4.750953, -28.709554, 147.328511, -2319.047124),
         (-4.632435, -28.163314, 205.279985, -2655.435607),
         (-4.543524, -24.046294, 171.827845, -2546.132699),
         (-4.451409, -19.971130, 69.908393, -1419.803605),
         (-4.339467, -18.692240, 66.266836, -1194.377127),
         (-4.235314, -16.654970, 55.898105, -1093.876708),
         (-4.126747, -14.616284, 26.164349, -640.681717),
         (-4.010283, -12.434506, -8.739633, -165.372484),
         (-3.887621, -10.777448, -20.745856, 50.762102),
         (-3.761872, -8.798728, -47.662770, 396.410650),
         (-3.627433, -8.711886, 5.994489, -163.465827),
         (-3.484411, -7.430829, 7.513457, -171.103490),
         (-3.334206, -6.025954, 4.574318, -126.921494),
         (-3.188695, -4.589599, -9.756188, 38.211268),
         (-3.048742, -3.731423, -9.586827, 53.344905),
         (-2.896622, -2.875385, -11.697657, 94.979058),
         (-2.741013, -2.299679, -3.439013, 15.879660),
         (-2.599801, -1.467104, -9.430064, 56.834672),
         (-2.453569, -0.765061, -17.533112, 156.853442),
         (-2.301900, -0.275209, -19.148860, 178.804066),
         (-2.142861, 0.157637, -20.358414, 188.589643),
         (-2.007412, 0.246378, -14.114589, 119.938019),
         (-1.872399, 0.356607, -12.489839, 107.857803),
         (-1.712878, 0.462696, -13.413731, 130.271836),
         (-1.540765, 0.757867, -20.408005, 196.602703),
         (-1.363901, 0.919984, -25.021772, 239.001276),
         (-1.171743, 0.812353, -20.931808, 178.176786),
         (-0.949889, 0.898521, -29.580393, 263.230476),
         (-0.663780, 1.227905, -48.698114, 455.010139),
         (-0.319633, 0.698594, -32.515228, 251.787233),
         (0.115391, 0.513642, -12.010148, -29.845231),
         (0.585531, 1.341742, -31.454766, 166.097574),
         (1.102515, -0.339871, 70.281321, -922.655932),
         (1.902642, -6.760836, 555.140571, -6708.513377)),
        4: ((-5.500721, -23.771506, -429.233517, 1210.861046),
         (-5.282350, -36.670856, 309.254168, -6256.969987),
         (-5.169763, -38.635928, 493.165350, -8085.457514),
         (-5.067537, -32.355568, 284.103332, -5079.050044),
         (-4.957844, -28.625535, 202.817480, -3907.149323),
         (-4.854410, -25.486074, 115.974518, -2605.853843),
         (-4.766782, -20.371582, -42.717107, -531.343909),
         (-4.659936, -18.509070, -34.049426, -571.102618),
         (-4.553424, -15.868378, -96.296001, 440.134545),
         (-4.435491, -14.896951, -63.682852, 192.683460),
         (-4.310283, -14.149680, -20.820913, -231.594401),
         (-4.187166, -11.959514, -41.379004, 62.175356),
         (-4.054310, -11.493505, 1.570808, -307.738334),
         (-3.918241, -8.882776, -43.831815, 275.422605),
         (-3.765440, -7.799731, -33.069859, 237.805310),
         (-3.621952, -6.201899, -38.162451, 278.746005),
         (-3.479834, -5.771399, -14.720486, 83.360344),
         (-3.331777, -4.418371, -23.510818, 198.612735),
         (-3.176708, -3.823248, -7.615618, 43.957325),
         (-3.035092, -2.985812, -10.522848, 94.127005),
         (-2.887885, -2.523753, -1.067149, 6.142721),
         (-2.737906, -1.943675, 3.322590, -44.040355),
         (-2.578713, -1.510685, 6.133443, -52.252052),
         (-2.446684, -1.035415, 1.605774, 2.320095),
         (-2.314321, -0.822458, 4.484443, -15.122503),
         (-2.158722, -0.531156, 2.631372, 20.420759),
         (-1.990952, -0.127028, -3.670852, 86.471950),
         (-1.821189, 0.118122, -4.473939, 68.215116),
         (-1.639828, -0.042429, 5.823715, -50.007844),
         (-1.433557, -0.503573, 20.980623, -208.445407),
         (-1.182550, -0.795338, 25.601186, -258.822580),
         (-0.896945, -0.806499, 9.358105, -42.692513),
         (-0.521849, -1.395128, 25.895279, -286.142385),
         (-0.109445, -1.309826, 13.844797, -181.659737),
         (0.358516, 0.808645, -84.823274, 1036.769263),
         (1.074721, -1.919745, 377.045493, -5537.435655)),
        5: ((-5.756328, -38.143820, -288.462275, 1233.839979),
         (-5.651104, -31.317825, -323.538968, 1356.095441),
         (-5.528533, -32.869999, -192.573882, 435.999718),
         (-5.438236, -28.744985, -216.647450, 785.511894),
         (-5.299645, -31.872550, 68.937473, -2465.153537),
         (-5.189021, -33.774599, 205.906175, -3552.410731),
         (-5.098455, -29.575034, 141.453413, -2835.590095),
         (-5.009490, -23.889574, -11.673907, -917.764168),
         (-4.902280, -22.088321, -0.761021, -971.709486),
         (-4.789919, -19.816988, -15.507792, -629.052902),
         (-4.661994, -18.712173, 5.280404, -643.233981),
         (-4.546519, -15.993336, -14.424845, -414.488724),
         (-4.416068, -14.840339, 5.362151, -481.571830),
         (-4.270543, -14.216098, 50.382316, -864.517826),
         (-4.122668, -12.251071, 34.756652, -579.099199),
         (-3.984837, -9.712739, -4.437536, -84.846005),
         (-3.847663, -8.338624, -5.350791, -34.177341),
         (-3.700206, -6.741207, -17.274682, 150.838822),
         (-3.545252, -6.006486, 4.286074, -69.051859),
         (-3.403816, -5.304646, 17.874292, -208.876468),
         (-3.259320, -4.330786, 15.697454, -168.219528),
         (-3.108969, -3.691992, 26.894884, -302.903432),
         (-2.951405, -3.041332, 30.399425, -329.170493),
         (-2.820064, -2.451662, 28.020987, -298.655541),
         (-2.690878, -1.883860, 25.740672, -281.343375),
         (-2.537756, -1.398474, 26.679979, -300.542596),
         (-2.373608, -0.657259, 13.456053, -162.072456),
         (-2.206522, -0.152958, 2.880840, -45.208840),
         (-2.029265, -0.265755, 14.602275, -167.689307),
         (-1.834090, -0.182967, 14.194353, -172.169305),
         (-1.596252, -0.525427, 27.380570, -342.620007),
         (-1.336584, -0.879696, 30.956196, -366.774813),
         (-0.995287, -1.647744, 25.740954, -219.926033),
         (-0.622512, -0.074666, -68.694168, 845.462008),
         (-0.186893, -0.630218, -82.072821, 1134.389914),
         (0.507895, 5.359638, -388.457067, 5156.448466)),
        6: ((-6.085765, -44.784051, -180.232379, -1418.645102),
         (-5.951936, -41.754626, -108.030516, -1790.428349),
         (-5.853685, -42.913898, 24.646456, -2740.877751),
         (-5.751795, -34.871356, -202.847624, 275.723504),
         (-5.640509, -33.594524, -102.188164, -909.679701),
         (-5.538361, -29.641949, -201.919276, 607.494858),
         (-5.438840, -26.744009, -229.725198, 1119.974018),
         (-5.320384, -29.208658, -18.773124, -956.558363),
         (-5.221896, -25.181962, -87.663936, -60.141444),
         (-5.099898, -25.195344, 4.483219, -917.577671),
         (-4.991369, -21.748159, -39.005512, -311.950842),
         (-4.861977, -20.227208, -15.092827, -411.558263),
         (-4.734205, -18.465039, -4.899480, -388.772525),
         (-4.596422, -16.563769, 4.007637, -339.393733),
         (-4.449933, -14.548774, 5.916664, -280.107954),
         (-4.308353, -12.839249, 13.683118, -301.528105),
         (-4.173973, -10.957616, -0.063050, -86.466186),
         (-4.025620, -9.446743, 3.415546, -73.931621),
         (-3.874974, -7.934360, 2.984963, -44.808445),
         (-3.737024, -6.518127, -2.845060, 28.749668),
         (-3.593242, -5.447309, -0.094044, 17.027595),
         (-3.443971, -4.389342, -1.297210, 44.123249),
         (-3.288417, -3.325364, -7.387922, 127.212502),
         (-3.158148, -2.515724, -10.908314, 167.197002),
         (-3.030511, -1.571507, -24.676724, 322.948029),
         (-2.874788, -1.384429, -6.641387, 116.944786),
         (-2.710376, -0.586187, -16.064564, 208.124962),
         (-2.544332, -0.159533, -19.713890, 272.612228),
         (-2.371212, 0.210329, -23.335952, 315.744937),
         (-2.182826, 0.807726, -41.474679, 524.653114),
         (-1.953169, 0.312973, -16.461446, 229.576209),
         (-1.710686, 0.510451, -29.863004, 381.366422),
         (-1.400403, 0.274224, -43.590213, 555.174581),
         (-1.048195, -0.343537, -43.689453, 547.097429),
         (-0.627321, -3.544196, 56.266662, -659.809157),
         (0.060966, -1.057975, -169.641526, 2689.631656)),
        7: ((-6.366599, -48.686471, -539.827727, 4663.155004),
         (-6.190013, -52.753906, -69.744671, -1345.462530),
         (-6.114775, -46.584827, -172.153207, -261.487821),
         (-6.000885, -42.423616, -298.940826, 2469.004207),
         (-5.900826, -40.238283, -192.253950, 1222.459388),
         (-5.794037, -40.033963, -56.217136, -450.034380),
         (-5.693097, -38.378906, -4.844716, -871.648464),
         (-5.581297, -37.897488, 91.447701, -1707.616467),
         (-5.498374, -30.653888, -103.195331, 519.073542),
         (-5.392552, -27.584734, -83.898365, 71.503092),
         (-5.264627, -27.421309, 20.544997, -1014.396467),
         (-5.141906, -25.111001, 21.715466, -873.546950),
         (-5.016742, -23.087353, 37.702477, -888.917438),
         (-4.878016, -21.493060, 72.642030, -1138.941642),
         (-4.732004, -19.177309, 73.111437, -1062.105289),
         (-4.593464, -16.201469, 25.379737, -377.297289),
         (-4.459224, -14.394731, 24.184849, -284.512736),
         (-4.311866, -12.754143, 34.122270, -364.275211),
         (-4.164425, -10.669323, 25.141213, -268.015622),
         (-4.023456, -9.712699, 41.101746, -384.021577),
         (-3.882347, -8.076955, 30.375541, -260.433774),
         (-3.737425, -6.504332, 19.166346, -125.894370),
         (-3.584752, -5.049479, 8.901829, -3.743972),
         (-3.455970, -3.960650, -0.585957, 109.120746),
         (-3.327376, -3.147018, -3.090519, 138.781035),
         (-3.173928, -2.541955, 0.961448, 115.371284),
         (-3.006571, -2.319891, 18.760410, -70.545614),
         (-2.842639, -1.700394, 21.541221, -141.879704),
         (-2.671465, -1.219894, 23.812398, -201.896835),
         (-2.483534, -0.653440, 14.703325, -117.949319),
         (-2.258413, -0.743872, 21.443524, -162.209686),
         (-2.018806, -1.124831, 27.619278, -163.576157),
         (-1.713249, -3.710445, 105.156372, -899.576859),
         (-1.384310, -4.892498, 115.030110, -916.845343),
         (-1.021471, -2.206796, -51.266778, 1077.651474),
         (-0.398656, 0.054033, -78.884577, 783.283054)),
        8: ((-6.632624, -62.414086, 110.875491, -5739.409087),
         (-6.475571, -57.290445, -88.754829, -1114.335254),
         (-6.370881, -58.047958, 156.603577, -4916.703543),
         (-6.247118, -56.326728, 239.196458, -5364.063523),
         (-6.144735, -52.071015, 204.035190, -4691.276927),
         (-6.034225, -52.851727, 408.289650, -7293.275141),
         (-5.949091, -46.565335, 246.759660, -5209.967481),
         (-5.865127, -38.773952, -30.294238, -1087.622315),
         (-5.771238, -34.958256, -73.430534, -411.896098),
         (-5.662433, -31.209853, -133.305372, 642.076724),
         (-5.535245, -30.968905, -12.604238, -707.489758),
         (-5.409874, -29.830661, 61.102729, -1420.818534),
         (-5.292056, -25.894264, -3.564975, -492.512773),
         (-5.157981, -22.575057, -41.389188, 122.098816),
         (-5.011068, -20.419198, -27.580102, 199.893657),
         (-4.871927, -17.713947, -42.510670, 491.256236),
         (-4.736238, -16.015045, -34.213626, 515.848936),
         (-4.590236, -14.492877, 3.151340, 16.484309),
         (-4.444451, -12.063815, -12.520762, 230.947852),
         (-4.306659, -10.370678, -14.971528, 278.240227),
         (-4.165864, -8.663995, -16.053824, 260.421297),
         (-4.020137, -7.018708, -23.257409, 367.346670),
         (-3.865467, -5.603146, -24.538854, 381.552814),
         (-3.735631, -4.693755, -19.662689, 322.250104),
         (-3.606878, -3.992845, -7.626114, 169.021921),
         (-3.455248, -3.107528, -3.978269, 123.705672),
         (-3.294253, -1.844534, -17.325885, 253.401201),
         (-3.131884, -0.604133, -41.813096, 545.682751),
         (-2.962073, 0.134358, -49.415695, 640.046929),
         (-2.775401, 0.625986, -51.742216, 669.145476),
         (-2.554455, 0.585555, -38.019121, 553.046219),
         (-2.316772, -0.330045, 3.286108, 121.731611),
         (-2.030318, -1.068223, 17.816729, -42.137861),
         (-1.712527, -2.750640, 28.283437, 168.349609),
         (-1.351060, -2.280955, -20.625635, 637.693333),
         (-0.786725, 10.604291, -574.690561, 6610.290161)),
        9: ((-6.814308, -72.539074, 66.160847, -5853.159213),
         (-6.688552, -68.771468, 199.799453, -6794.558027),
         (-6.592521, -71.777804, 606.112823, -12137.320357),
         (-6.499768, -65.989776, 506.435745, -9950.845407),
         (-6.387537, -60.047268, 351.519898, -7515.978010),
         (-6.298149, -53.584164, 151.651632, -4379.703210),
         (-6.222583, -45.309467, -89.791752, -873.198575),
         (-6.123836, -41.666757, -125.829685, 46.058732),
         (-6.015653, -39.449344, -106.104368, 34.519925),
         (-5.893988, -38.805373, 7.497721, -1246.653559),
         (-5.781307, -35.286773, -29.343503, -404.812582),
         (-5.659281, -33.756758, 52.880538, -1224.611472),
         (-5.544383, -29.029503, -30.361570, -60.408847),
         (-5.413400, -25.636322, -53.271073, 352.479468),
         (-5.269835, -23.094104, -34.389344, 206.304431),
         (-5.119800, -22.328815, 47.212598, -712.137279),
         (-4.986728, -20.466531, 67.439942, -863.717553),
         (-4.843091, -17.544702, 34.335707, -341.823950),
         (-4.693381, -15.717462, 54.460246, -593.998890),
         (-4.557125, -13.642465, 40.732645, -346.230540),
         (-4.418061, -11.466172, 22.615298, -109.432904),
         (-4.271768, -9.888407, 26.928962, -137.610245),
         (-4.118845, -8.229968, 28.373430, -205.041511),
         (-3.988307, -7.402907, 44.984564, -404.016979),
         (-3.859559, -6.393913, 46.792306, -421.874144),
         (-3.707679, -5.268701, 41.305733, -328.080289),
         (-3.545372, -4.045886, 34.221600, -250.233067),
         (-3.380130, -3.359988, 40.394101, -299.757770),
         (-3.209773, -2.815307, 47.550864, -350.010350),
         (-3.026091, -2.076707, 44.342832, -327.100816),
         (-2.807972, -1.730429, 52.791891, -459.567525),
         (-2.577624, -1.977777, 73.327935, -661.200108),
         (-2.300371, -3.213645, 135.203802, -1492.453674),
         (-2.013245, -2.825219, 98.144149, -990.132802),
         (-1.683120, -1.102969, -32.339387, 649.826434),
         (-1.063115, -3.648764, 51.920085, -903.541943)),
        10: ((-7.164236, -58.080441, -718.024711, 1664.614487),
         (-7.000818, -57.462292, -562.992052, 2006.150463),
         (-6.891737, -60.074528, -303.142362, -645.766820),
         (-6.776873, -56.497041, -282.470475, -417.755544),
         (-6.673452, -54.356401, -83.016715, -3815.260555),
         (-6.584212, -50.597625, -154.440005, -1474.871840),
         (-6.469225, -49.546762, -43.800679, -2967.641584),
         (-6.363188, -45.116372, -191.035585, 226.416542),
         (-6.266768, -41.850213, -171.570871, -5.566257),
         (-6.159646, -38.510013, -179.743402, 342.139835),
         (-6.046302, -34.150692, -270.312483, 2136.614634),
         (-5.919063, -32.849794, -180.525320, 1334.192238),
         (-5.797268, -29.978852, -166.562473, 1394.741770),
         (-5.658031, -27.682867, -128.648889, 1144.237481),
         (-5.509081, -26.114641, -42.471327, 100.268687),
         (-5.366644, -24.132787, 4.967430, -447.943489),
         (-5.234891, -21.487043, -7.166477, -145.282708),
         (-5.091688, -18.843891, -17.752296, 193.490248),
         (-4.943977, -16.373155, -20.625470, 322.496113),
         (-4.806208, -14.663721, -3.018181, 156.397740),
         (-4.665027, -12.715244, -3.341047, 207.777122),
         (-4.517838, -11.196196, 14.998167, -11.737560),
         (-4.363279, -9.627454, 25.194605, -119.995429),
         (-4.235307, -8.294786, 24.681630, -96.708151),
         (-4.108357, -6.987388, 24.651033, -143.513587),
         (-3.956865, -6.025058, 43.074690, -416.347108),
         (-3.793464, -4.709171, 34.147959, -269.921135),
         (-3.631237, -3.480154, 30.953926, -304.919916),
         (-3.461030, -2.642004, 35.435647, -408.133600),
         (-3.273755, -1.989569, 31.623877, -276.406563),
         (-3.058032, -1.490962, 44.931971, -500.906331),
         (-2.839187, -0.036949, -4.749277, 158.378056),
         (-2.561903, -2.137301, 80.122426, -732.734169),
         (-2.279921, -1.083273, -4.166430, 466.120471),
         (-1.936235, -1.459532, -108.436617, 2568.090199),
         (-1.420195, 5.265804, -309.949228, 3109.741681)),
        11: ((-7.312543, -73.950113, -344.256620, -1914.333581),
         (-7.142554, -78.509379, 317.537632, -12110.903916),
         (-7.075654, -67.925540, -237.981146, -2172.954094),
         (-6.964026, -66.358779, 74.935185, -8406.504954),
         (-6.825418, -72.581402, 509.113143, -12217.483329),
         (-6.765651, -62.110800, 162.461844, -6692.398026),
         (-6.686108, -55.645343, -0.451244, -3711.924049),
         (-6.584325, -52.729615, 43.277560, -4289.177256),
         (-6.477566, -50.671684, 82.908816, -4249.910817),
         (-6.371294, -45.746345, -25.202111, -2050.972559),
         (-6.244347, -44.386432, 40.143143, -2153.878986),
         (-6.123990, -40.792117, 21.439628, -1436.858613),
         (-6.001867, -37.518482, 7.177501, -883.128998),
         (-5.860964, -35.217001, 51.912501, -1227.974538),
         (-5.723174, -31.204492, 24.781161, -630.559612),
         (-5.593266, -27.047232, -12.452952, -113.074612),
         (-5.461582, -24.302551, -8.711450, -110.072066),
         (-5.317032, -21.929876, 19.843810, -474.175380),
         (-5.172525, -18.424394, -28.590024, 312.515619),
         (-5.033298, -16.797535, -4.168057, 106.187043),
         (-4.888494, -15.387377, 25.837362, -206.759014),
         (-4.741664, -13.568706, 44.878123, -525.283197),
         (-4.589717, -11.368927, 31.952196, -312.347796),
         (-4.461864, -9.926472, 34.665331, -316.218756),
         (-4.336374, -8.351152, 28.645358, -250.894742),
         (-4.185622, -6.913116, 28.660329, -245.112563),
         (-4.021619, -5.718480, 38.007792, -364.341126),
         (-3.860632, -4.242355, 21.434324, -113.151873),
         (-3.692411, -3.194411, 22.745524, -126.552547),
         (-3.508214, -2.419160, 27.888588, -169.206042),
         (-3.291011, -2.056369, 43.659744, -309.873800),
         (-3.067954, -1.560345, 38.216967, -153.469591),
         (-2.804396, -1.647282, 65.598054, -604.119711),
         (-2.535825, 0.283124, -38.260088, 742.071640),
         (-2.210701, -2.953630, 139.483168, -2132.505536),
         (-1.651582, 1.135992, -391.673872, 7445.869016)),
        12: ((-7.405169, -116.467822, 1418.683063, -29186.310415),
         (-7.304608, -101.148751, 943.631638, -21527.655374),
         (-7.267683, -81.052438, 47.439048, -6806.062133),
         (-7.136428, -78.301950, 96.527296, -5634.789686),
         (-7.075108, -66.716157, -220.422867, -779.546755),
         (-6.988065, -61.487183, -274.774420, 280.514939),
         (-6.865353, -64.677010, 97.431993, -4567.746279),
         (-6.748619, -64.604228, 299.148158, -7234.887544),
         (-6.672607, -55.990534, 21.408854, -2875.486579),
         (-6.569033, -51.193664, -74.103376, -610.279679),
         (-6.457638, -47.747192, -93.210303, 513.923650),
         (-6.331672, -45.275056, -31.788072, -88.080141),
         (-6.207538, -42.979277, 54.581939, -1177.606262),
         (-6.072361, -39.433730, 55.686020, -970.219791),
         (-5.941840, -33.771090, -48.592042, 766.209966),
         (-5.803625, -30.331754, -42.484219, 678.386691),
         (-5.672623, -27.260202, -50.961806, 962.790905),
         (-5.526966, -25.073650, -2.533969, 370.842795),
         (-5.380020, -22.370805, 9.744895, 243.808536),
         (-5.247541, -19.590439, 2.842151, 308.003025),
         (-5.107977, -17.088423, -7.776270, 582.045831),
         (-4.963012, -14.674094, -13.744564, 644.241199),
         (-4.810638, -12.379181, -23.827593, 860.187164),
         (-4.681434, -11.019194, -3.637068, 541.437973),
         (-4.553299, -9.647075, 8.592656, 300.979410),
         (-4.403598, -8.114958, 17.889732, 143.089821),
         (-4.240135, -6.751195, 24.512477, 84.893506),
         (-4.076556, -5.878231, 55.617427, -415.702410),
         (-3.911481, -3.866761, 18.717177, 10.761586),
         (-3.729054, -2.734650, 11.196468, 159.075897),
         (-3.514237, -1.989874, 17.602905, 130.363836),
         (-3.298050, -0.031033, -36.592870, 712.678106),
         (-3.037583, 0.500179, -38.556029, 742.246689),
         (-2.754250, -0.752860, -4.586878, 562.886883),
         (-2.465312, 0.489570, -115.545081, 2652.740175),
         (-1.989772, 8.990301, -735.839916, 12560.599209)),
    },
    'constant': {
        1: ((-4.631463, -21.690946, -22.150981, -1705.878640),
         (-4.478442, -18.611671, -41.529760, -983.280070),
         (-4.380764, -16.493704, -83.188988, -285.735180),
         (-4.262258, -15.904991, -14.624916, -866.141762),
         (-4.145789, -13.990706, -28.161230, -560.954646),
         (-4.040101, -13.310294, 0.701222, -744.800768),
         (-3.932790, -11.691432, -12.440728, -462.020736),
         (-3.823547, -9.845724, -35.674341, -93.437553),
         (-3.713312, -8.324660, -49.567196, 141.914354),
         (-3.591878, -7.529664, -34.739842, 63.744072),
         (-3.465733, -6.836219, -11.957387, -146.836850),
         (-3.332288, -6.069011, -1.429784, -206.187365),
         (-3.198279, -5.029903, -8.473428, -47.974275),
         (-3.052613, -4.133330, -7.543340, 2.340365),
         (-2.899327, -3.244305, -5.944451, 14.413381),
         (-2.753003, -2.396365, -5.386059, 19.535752),
         (-2.614337, -1.550262, -11.661097, 97.309860),
         (-2.462141, -0.986056, -8.629239, 72.987798),
         (-2.308274, -0.329454, -11.827647, 109.756223),
         (-2.165815, 0.087184, -11.218170, 105.099437),
         (-2.018131, 0.308947, -6.278832, 59.593582),
         (-1.864842, 0.479906, -1.773268, 14.695770),
         (-1.703384, 0.715607, -2.452388, 28.385302),
         (-1.565480, 0.715743, 2.565137, -20.141510),
         (-1.428468, 0.958026, -1.692540, 27.220960),
         (-1.260217, 0.991934, 2.421857, -15.618235),
         (-1.070433, 1.375100, -5.098800, 62.494964),
         (-0.864657, 1.545714, -3.355691, 41.628162),
         (-0.638897, 1.829260, -6.605496, 68.508607),
         (-0.385923, 2.264560, -16.278024, 163.618440),
         (-0.082527, 2.455017, -18.755816, 205.640578),
         (0.234568, 2.713968, -20.844422, 242.838623),
         (0.602367, 3.383947, -31.900952, 406.713540),
         (0.976688, 3.635381, -9.506321, 197.891713),
         (1.371464, 4.559913, -3.036659, 267.582107),
         (1.974367, 11.236615, -128.144620, 1673.312329)),
        2: ((-5.069339, -23.652181, -371.848430, 2866.126698),
         (-4.928996, -22.278910, -258.566800, 1900.808954),
         (-4.829410, -21.198864, -223.563659, 1608.510134),
         (-4.705831, -20.971690, -131.298572, 700.563112),
         (-4.591353, -19.088280, -113.480520, 566.712916),
         (-4.487087, -19.129497, -27.153800, -352.414909),
         (-4.381149, -17.499672, -21.261053, -350.513035),
         (-4.276463, -15.680882, -28.870394, -159.870268),
         (-4.165920, -14.582412, -13.941689, -206.973955),
         (-4.043847, -13.700949, 5.403470, -310.958083),
         (-3.920218, -12.574276, 21.486916, -443.310196),
         (-3.800919, -10.122211, -13.148803, -63.033477),
         (-3.674334, -8.331951, -29.600778, 150.617294),
         (-3.529158, -7.512105, -11.239876, -7.597997),
         (-3.377016, -6.379978, -9.832244, 33.368607),
         (-3.232234, -5.253189, -7.391546, 8.888874),
         (-3.091582, -4.579586, -0.189821, -35.538484),
         (-2.939912, -3.724927, 0.147472, -22.209317),
         (-2.785972, -2.893488, -1.243521, 1.565749),
         (-2.643518, -2.298246, -0.789460, 7.085760),
         (-2.497881, -1.683698, -2.529764, 25.485429),
         (-2.347077, -1.171816, -3.089512, 32.308515),
         (-2.187778, -0.800622, -0.962088, 1.889817),
         (-2.054759, -0.476420, -2.050111, 12.043987),
         (-1.919730, -0.384389, 1.727822, -24.116391),
         (-1.760355, -0.128970, -2.134027, 23.083531),
         (-1.583765, -0.002060, -1.475829, 4.976464),
         (-1.398364, -0.187475, 7.194429, -87.788294),
         (-1.195613, -0.119710, 4.365053, -60.026407),
         (-0.953340, -0.097124, 0.729079, -26.974440),
         (-0.645535, 0.012180, -10.578534, 83.933342),
         (-0.310633, 0.037530, -26.951328, 269.312340),
         (0.083146, -0.035709, -38.421430, 335.385263),
         (0.493317, -0.842208, -36.154636, 266.264330),
         (0.909960, -1.113432, -38.735691, 141.027455),
         (1.623759, -3.853169, -28.110995, 55.604186)),
        3: ((-5.479882, -29.304745, -332.490894, 1448.676126),
         (-5.351544, -21.562849, -524.772460, 4289.045986),
         (-5.260075, -22.406396, -361.131514, 2499.093773),
         (-5.120914, -24.147973, -193.267706, 941.764955),
         (-5.002941, -22.555544, -163.490992, 823.689463),
         (-4.899475, -20.793567, -165.992427, 993.600289),
         (-4.787939, -19.877711, -122.720260, 590.426778),
         (-4.667449, -19.181298, -88.168798, 411.752040),
         (-4.555963, -18.630519, -33.609020, -93.943831),
         (-4.445726, -16.332970, -52.590894, 221.907374),
         (-4.324631, -14.910679, -36.686441, 93.635714),
         (-4.199248, -13.176253, -32.928319, 80.870883),
         (-4.072440, -11.477222, -33.437384, 131.095575),
         (-3.930115, -10.469551, -9.980433, -50.125386),
         (-3.778423, -9.253300, 2.247992, -129.554690),
         (-3.634571, -7.813195, -0.965497, -61.010548),
         (-3.497327, -6.626751, -1.709507, -30.854348),
         (-3.347266, -5.498087, -3.106436, 14.379693),
         (-3.194333, -4.567820, 1.780565, -27.743623),
         (-3.054305, -3.697598, 1.962507, -32.344173),
         (-2.910731, -2.793802, -2.296480, 11.050227),
         (-2.760234, -2.205561, 1.186587, -21.829346),
         (-2.602504, -1.601709, 0.851897, -12.060458),
         (-2.469117, -1.258796, 2.125316, -13.510186),
         (-2.337873, -0.778766, -2.341754, 30.331049),
         (-2.182365, -0.395440, -3.254588, 29.907074),
         (-2.011816, -0.068999, -6.663476, 69.101178),
         (-1.838024, -0.006416, -0.436996, -14.851455),
         (-1.651642, 0.081529, -0.941866, -11.877503),
         (-1.435550, -0.139672, 2.968661, -42.291601),
         (-1.163263, -0.363471, 5.202860, -63.206050),
         (-0.850331, -0.417730, 5.440465, -125.179712),
         (-0.456023, -0.444553, -2.536480, -83.836751),
         (-0.030661, -1.793036, 33.640576, -503.718730),
         (0.401573, 0.343215, -56.078896, 298.853627),
         (1.129567, 0.730921, -105.277611, 440.180490)),
        4: ((-5.772273, -40.892002, -290.873577, 1806.807386),
         (-5.656103, -33.489645, -360.321028, 2694.897976),
         (-5.538633, -32.323917, -355.280689, 3052.125778),
         (-5.446784, -28.095995, -313.629140, 2223.726064),
         (-5.360746, -22.382594, -418.886896, 3428.849642),
         (-5.239661, -24.517200, -232.850624, 1553.657956),
         (-5.125965, -23.297392, -206.296909, 1437.848384),
         (-5.023740, -21.594242, -162.868890, 972.656253),
         (-4.917967, -20.677258, -106.405023, 413.787003),
         (-4.795713, -20.196291, -57.750255, 140.878702),
         (-4.677505, -18.217721, -49.658610, 126.080933),
         (-4.555443, -16.126814, -51.447812, 200.975646),
         (-4.421298, -15.816242, 10.918889, -388.542120),
         (-4.284595, -13.440555, -7.591911, -153.119532),
         (-4.136532, -11.592942, -12.039123, -17.290583),
         (-3.994128, -9.766975, -21.531319, 133.099473),
         (-3.857270, -8.417777, -21.507379, 183.183373),
         (-3.708676, -7.169341, -15.245503, 138.712136),
         (-3.554056, -6.356409, 0.115440, 17.437772),
         (-3.413243, -5.529342, 6.446891, -17.330999),
         (-3.270570, -4.454279, 4.338195, -2.248224),
         (-3.120204, -3.793976, 13.305644, -98.603347),
         (-2.964696, -2.860948, 8.821784, -54.987846),
         (-2.832976, -2.334295, 9.808480, -57.691355),
         (-2.702401, -1.768705, 6.325319, -21.213939),
         (-2.547006, -1.343703, 7.496674, -32.642763),
         (-2.379002, -0.890158, 4.636592, -1.102588),
         (-2.209720, -0.550256, 3.402699, 3.358682),
         (-2.028011, -0.621464, 10.758844, -61.927434),
         (-1.828678, -0.462244, 8.825542, -52.317329),
         (-1.582183, -0.387596, 1.074295, 37.197695),
         (-1.304746, -0.657380, 3.515855, 0.597645),
         (-0.938238, -1.425553, 13.251787, -81.497977),
         (-0.555778, 0.036421, -35.748260, 287.364020),
         (-0.090095, -1.788698, 5.684556, -82.714689),
         (0.673276, -4.814086, 46.782421, -282.793417)),
        5: ((-5.981340, -63.593857, 422.787662, -6843.113817),
         (-5.891707, -51.425281, 145.354209, -3524.154517),
         (-5.835189, -43.883797, -54.965059, -1198.464144),
         (-5.745018, -37.103785, -146.586724, -203.285267),
         (-5.659630, -30.384958, -280.548864, 1401.050530),
         (-5.551817, -30.103483, -186.632421, 562.376393),
         (-5.447739, -27.825600, -193.270908, 897.423895),
         (-5.329369, -27.554378, -101.603673, 63.311235),
         (-5.231172, -23.436883, -191.841448, 1299.809934),
         (-5.111669, -22.660149, -137.741504, 945.172440),
         (-4.989031, -21.316867, -106.730603, 747.383165),
         (-4.863731, -20.058471, -58.906268, 263.865247),
         (-4.741533, -17.814959, -59.585041, 366.956994),
         (-4.599971, -16.322637, -33.597185, 172.871768),
         (-4.455213, -14.159904, -37.723202, 313.199926),
         (-4.312865, -12.598553, -22.876129, 203.428375),
         (-4.176308, -11.382816, -2.745638, 15.062160),
         (-4.030800, -9.812077, 6.647566, -101.770990),
         (-3.881505, -8.177971, 3.114753, -50.725091),
         (-3.743436, -6.790723, -2.124463, 18.887622),
         (-3.600037, -5.617825, -3.507844, 56.012534),
         (-3.451217, -4.455748, -8.748778, 120.872204),
         (-3.295453, -3.564075, -5.827911, 105.792302),
         (-3.165317, -2.808269, -5.372277, 87.137396),
         (-3.035431, -2.177688, -5.118028, 84.371025),
         (-2.880684, -1.685296, -1.573118, 57.667076),
         (-2.713763, -1.042379, -6.185898, 106.046045),
         (-2.546185, -0.670629, -3.250433, 70.677901),
         (-2.369248, -0.434721, -1.353977, 48.890657),
         (-2.175176, -0.308563, 0.552303, 35.073138),
         (-1.937955, -0.679950, 12.199410, -56.667220),
         (-1.677722, -1.180083, 16.724817, -36.276304),
         (-1.345480, -2.358185, 39.792312, -223.446828),
         (-0.980684, -1.455759, -20.282277, 443.053101),
         (-0.514306, -7.630135, 194.816997, -1839.896565),
         (0.192550, -4.792520, 35.944462, -76.189876)),
        6: ((-6.356782, -61.014208, 160.511829, -5419.063369),
         (-6.215135, -53.312795, 13.699532, -2654.941566),
         (-6.164443, -42.406841, -308.072715, 1163.747944),
         (-6.054790, -36.770341, -408.108430, 2639.980143),
         (-5.948820, -36.501702, -256.227394, 928.138373),
         (-5.816770, -38.638763, -92.300159, -402.675740),
         (-5.722072, -35.205863, -111.239614, -61.635559),
         (-5.622905, -31.261664, -155.229635, 489.006243),
         (-5.518766, -29.550849, -113.568160, 132.083828),
         (-5.400346, -27.806915, -94.947999, 215.855352),
         (-5.284878, -25.237811, -104.947404, 567.427079),
         (-5.159161, -23.632766, -61.556345, 204.531733),
         (-5.035306, -21.019274, -72.301419, 427.497905),
         (-4.893848, -19.295359, -50.765317, 357.237867),
         (-4.741707, -18.091008, -6.459812, -3.197829),
         (-4.606380, -15.160401, -30.051422, 257.590881),
         (-4.474583, -13.087742, -33.241548, 305.329175),
         (-4.327525, -11.390747, -26.952558, 289.976687),
         (-4.175636, -9.882969, -21.337879, 294.451327),
         (-4.036998, -8.795650, -2.430396, 89.386612),
         (-3.894877, -7.578270, 6.401294, -0.813789),
         (-3.746464, -6.325376, 6.263946, 15.783100),
         (-3.590100, -5.349555, 14.047494, -62.572387),
         (-3.460386, -4.463809, 14.727976, -78.346706),
         (-3.329609, -3.828701, 18.144399, -99.687517),
         (-3.176992, -2.938740, 14.302776, -70.332711),
         (-3.011608, -2.264812, 16.351173, -95.898506),
         (-2.847095, -1.638753, 14.612611, -78.025946),
         (-2.674897, -1.157358, 16.470749, -126.959568),
         (-2.482795, -1.164789, 30.620780, -282.694626),
         (-2.258092, -0.688155, 20.605074, -188.546125),
         (-2.011030, -1.048338, 31.229114, -296.009733),
         (-1.703003, -1.971806, 49.256828, -431.041712),
         (-1.359727, -2.289643, 41.433623, -414.280611),
         (-0.944931, -5.109803, 114.969440, -1121.918432),
         (-0.238864, -8.738380, 232.936533, -2564.296857)),
        7: ((-6.699893, -51.385033, -494.017921, 1343.747807),
         (-6.580992, -40.265867, -848.240101, 7065.811391),
         (-6.457861, -43.191526, -610.573248, 4527.641798),
         (-6.355756, -41.111712, -462.027613, 2892.528354),
         (-6.201128, -43.492460, -229.410584, 683.403318),
         (-6.120850, -36.605531, -419.375106, 3246.034008),
         (-6.011008, -34.688171, -377.665362, 3031.665758),
         (-5.896902, -32.748161, -348.207938, 2909.799745),
         (-5.801541, -29.664907, -345.912279, 3039.198414),
         (-5.680725, -28.778216, -262.333795, 2208.276539),
         (-5.562981, -26.391526, -231.532668, 1880.708177),
         (-5.432460, -25.195181, -166.430693, 1293.398873),
         (-5.306246, -22.930778, -157.436617, 1391.358577),
         (-5.166630, -21.226432, -115.373922, 1065.746394),
         (-5.021476, -19.024093, -91.752138, 898.668009),
         (-4.879956, -16.826576, -81.551662, 842.497031),
         (-4.746179, -15.153411, -61.903311, 680.990277),
         (-4.598206, -13.639531, -34.927604, 418.795316),
         (-4.449841, -11.722898, -32.290843, 428.419255),
         (-4.309536, -10.344602, -24.085879, 367.316986),
         (-4.168935, -8.645968, -30.443678, 472.346475),
         (-4.021742, -7.234920, -26.419226, 431.137110),
         (-3.866937, -6.103695, -16.011893, 331.695413),
         (-3.737866, -4.978289, -19.148307, 361.504690),
         (-3.607959, -4.233632, -12.310461, 290.323809),
         (-3.456131, -3.333805, -7.286249, 205.260103),
         (-3.290497, -2.775962, 7.541891, 27.433610),
         (-3.125682, -1.957385, 2.863680, 81.701778),
         (-2.951960, -1.648711, 11.960835, -2.569198),
         (-2.766963, -0.656912, -9.899929, 241.841169),
         (-2.541492, -0.776291, 5.757785, 79.229824),
         (-2.302164, -1.221087, 30.444483, -211.572931),
         (-2.014543, -1.212798, 26.602867, -211.566917),
         (-1.687724, -3.568439, 85.332162, -718.143765),
         (-1.307194, -4.113619, 68.635576, -507.968625),
         (-0.645560, -6.552377, 126.116536, -1273.965833)),
        8: ((-6.831245, -73.137275, 67.380699, -5128.747784),
         (-6.667734, -72.097212, 265.727141, -6934.131184),
         (-6.621616, -59.117722, -194.812524, -710.560699),
         (-6.516518, -53.499934, -246.734104, 277.376707),
         (-6.399212, -51.976600, -185.221255, 445.973204),
         (-6.303661, -52.150207, -0.555982, -1681.340468),
         (-6.211723, -48.168959, -26.003759, -1200.716518),
         (-6.121526, -42.080937, -149.410800, 429.167375),
         (-6.018589, -39.071613, -141.518290, 484.247474),
         (-5.902944, -37.182616, -90.344906, 69.152762),
         (-5.783874, -35.403084, -37.636627, -301.368732),
         (-5.666420, -32.222681, -39.117057, -133.850282),
         (-5.543729, -29.475964, -33.935115, -40.278171),
         (-5.413702, -26.388818, -32.433368, 40.328301),
         (-5.274234, -23.079046, -45.798183, 313.612524),
         (-5.132640, -20.836539, -28.425019, 201.762921),
         (-4.999046, -18.795540, -14.259223, 103.106651),
         (-4.852918, -16.466021, -16.941190, 216.679550),
         (-4.704560, -14.368112, -12.488059, 216.432406),
         (-4.569727, -12.240041, -20.738771, 324.828322),
         (-4.425155, -11.019237, -0.449713, 143.266112),
         (-4.277682, -9.435544, 2.450813, 121.874563),
         (-4.124088, -8.035171, 13.514999, -18.141903),
         (-3.995246, -6.811028, 14.662206, -52.413493),
         (-3.867165, -5.761182, 15.297036, -57.055212),
         (-3.717143, -4.462788, 10.288971, -22.025978),
         (-3.551474, -3.829240, 26.990429, -208.305539),
         (-3.387732, -2.930419, 26.825297, -216.170400),
         (-3.216385, -2.281595, 30.009110, -255.387774),
         (-3.027035, -2.036311, 43.588675, -407.704878),
         (-2.808366, -1.199140, 28.315266, -237.742066),
         (-2.578354, -0.952842, 31.946449, -302.885072),
         (-2.291107, -1.575326, 35.315474, -201.042486),
         (-1.967931, -4.140957, 104.618841, -887.469605),
         (-1.611428, -3.262707, 1.365403, 456.839865),
         (-0.926200, -12.907393, 313.070756, -2773.194436)),
        9: ((-7.067680, -86.993400, 402.922479, -9831.707762),
         (-6.913297, -79.116875, 244.211756, -6427.618053),
         (-6.849730, -68.296716, -129.655780, -1209.093878),
         (-6.740292, -64.229528, -61.413724, -1890.486571),
         (-6.631194, -60.879838, -57.135572, -1406.697985),
         (-6.530064, -59.783982, 94.265539, -3086.329704),
         (-6.442163, -54.749928, 58.011029, -2722.377490),
         (-6.349634, -49.085885, -49.248059, -1125.663205),
         (-6.250011, -44.256077, -135.081061, 227.604586),
         (-6.148557, -40.503050, -130.860986, 306.320870),
         (-6.023849, -39.566309, -27.880639, -667.937402),
         (-5.905655, -36.274122, -31.369728, -387.637777),
         (-5.785175, -32.763836, -57.620746, 188.127171),
         (-5.650254, -29.876015, -39.587733, 138.252558),
         (-5.502188, -27.886658, 15.802292, -425.678976),
         (-5.365249, -24.548407, -10.939894, 59.494157),
         (-5.237256, -21.408245, -35.922903, 449.021815),
         (-5.088512, -19.721085, 3.896402, 54.773819),
         (-4.940409, -17.455439, 14.854492, -32.147395),
         (-4.804509, -15.343504, 16.527919, -38.180866),
         (-4.665181, -13.074126, 5.624783, 107.247473),
         (-4.518392, -11.339303, 11.182664, 61.627483),
         (-4.363592, -9.842672, 24.491307, -102.134814),
         (-4.233603, -8.710003, 34.462789, -225.816012),
         (-4.108208, -7.042935, 18.579618, -67.078798),
         (-3.956399, -5.815631, 19.670349, -81.637375),
         (-3.794540, -4.310789, 5.881260, 91.382983),
         (-3.630645, -3.479873, 14.952114, -15.912141),
         (-3.459500, -2.843664, 24.573857, -122.046467),
         (-3.272527, -2.437241, 40.969022, -329.542413),
         (-3.054949, -1.489453, 22.934513, -82.025457),
         (-2.819005, -2.222713, 66.723923, -592.357892),
         (-2.550862, -1.626411, 55.123510, -517.244601),
         (-2.248963, -3.417416, 95.547153, -786.815981),
         (-1.935249, 1.379975, -141.828867, 1868.749155),
         (-1.274828, -9.883401, 193.727638, -1571.084447)),
        10: ((-7.335206, -70.317045, -699.123884, 2495.171219),
         (-7.182282, -70.057980, -243.231615, -2964.420282),
         (-7.071568, -71.894630, 3.147695, -5547.498200),
         (-6.980059, -64.530969, -145.386996, -3252.259491),
         (-6.827904, -71.402717, 336.041130, -8251.569339),
         (-6.730435, -67.770148, 274.217845, -6421.828816),
         (-6.655344, -60.284834, 101.960952, -3846.584301),
         (-6.573036, -53.521370, -46.005578, -1659.578372),
         (-6.486292, -47.537839, -165.686592, 271.694628),
         (-6.374017, -44.236835, -163.760147, 498.383004),
         (-6.250505, -42.065297, -122.539294, 460.869398),
         (-6.132116, -39.426706, -73.499474, 70.767314),
         (-6.009070, -35.689294, -122.553982, 1135.590354),
         (-5.873642, -32.615241, -107.925019, 1177.657842),
         (-5.732069, -29.189292, -114.754442, 1537.612921),
         (-5.594004, -26.413639, -85.978537, 1186.081842),
         (-5.462517, -24.027211, -63.153637, 979.421812),
         (-5.317518, -21.544244, -43.325464, 754.373542),
         (-5.169903, -19.039138, -29.370441, 598.605392),
         (-5.032928, -16.993061, -17.371592, 505.779715),
         (-4.889034, -15.444503, 13.788758, 105.925288),
         (-4.745690, -13.124485, 8.091306, 150.436798),
         (-4.595071, -10.707957, -10.495808, 374.439957),
         (-4.464816, -9.612387, 10.012514, 123.216208),
         (-4.337549, -8.020604, 2.420000, 174.854570),
         (-4.188587, -6.231458, -10.647954, 303.449726),
         (-4.023827, -5.189433, -1.273985, 247.463806),
         (-3.862180, -3.911615, -0.089604, 190.123543),
         (-3.695898, -2.404018, -16.224694, 346.567570),
         (-3.511901, -1.440942, -18.743952, 380.488031),
         (-3.295715, -0.711852, -24.538978, 565.051121),
         (-3.067156, -1.038576, 13.663527, 114.297958),
         (-2.804027, -0.638289, 14.535640, 78.753843),
         (-2.527149, 0.047088, -31.314755, 852.763198),
         (-2.197756, 1.361461, -163.085595, 2754.451575),
         (-1.714302, 12.925551, -609.671601, 6973.131005)),
        11: ((-7.535032, -68.419527, -1215.831861, 8404.629852),
         (-7.426018, -61.024301, -1228.710922, 9988.905239),
         (-7.317989, -66.922008, -562.041639, 378.589735),
         (-7.242596, -55.470601, -995.973009, 9316.651288),
         (-7.126176, -55.206675, -801.261452, 7385.177184),
         (-7.020537, -52.928730, -799.527134, 8405.935708),
         (-6.909061, -56.030480, -373.114582, 2235.136190),
         (-6.789869, -58.710281, -4.178834, -2785.560145),
         (-6.680580, -56.657989, 65.029024, -3380.802086),
         (-6.576899, -51.784740, -3.573549, -1949.636809),
         (-6.462877, -47.351663, -79.698107, -209.942977),
         (-6.338141, -44.982987, 10.854687, -1440.924869),
         (-6.218307, -41.228275, -15.233109, -654.121981),
         (-6.083516, -38.172758, 9.861389, -667.163006),
         (-5.943581, -34.078368, -18.365264, -31.834229),
         (-5.806665, -30.798725, -21.079600, 280.700062),
         (-5.677339, -27.505278, -35.458707, 611.403318),
         (-5.530887, -25.312881, 13.407740, 16.268759),
         (-5.385469, -21.910263, -18.525275, 620.178954),
         (-5.248621, -19.709604, 1.112237, 338.772229),
         (-5.107849, -17.795026, 20.129191, 191.306170),
         (-4.961336, -15.733621, 27.550745, 132.428685),
         (-4.807735, -13.671268, 32.453372, 83.605826),
         (-4.680549, -11.762280, 17.699392, 318.275781),
         (-4.553003, -10.360544, 28.903977, 111.370179),
         (-4.401009, -9.044019, 45.049354, -117.721940),
         (-4.239420, -7.291206, 36.498020, -30.720631),
         (-4.076664, -5.724582, 26.288819, 77.047762),
         (-3.907705, -4.674328, 36.830776, -107.104918),
         (-3.724198, -3.564132, 40.925368, -244.151819),
         (-3.509674, -2.840265, 55.193311, -413.340451),
         (-3.281636, -2.818387, 77.905000, -600.872994),
         (-3.013329, -3.806650, 162.447708, -1895.541906),
         (-2.724985, -7.044151, 315.274038, -3771.106839),
         (-2.408704, -8.537944, 366.465514, -4551.279610),
         (-1.766636, -26.838627, 1173.467621, -15915.283237)),
        12: ((-7.678293, -101.705336, -122.503864, -1876.324180),
         (-7.497712, -103.701933, 359.150514, -8204.720399),
         (-7.461447, -87.172563, -272.649781, 1272.040560),
         (-7.356578, -81.782560, -105.082014, -2196.885656),
         (-7.268308, -77.226743, -42.657354, -3118.173209),
         (-7.168901, -75.738598, 170.484411, -6128.903352),
         (-7.090395, -67.794754, 27.059574, -4179.817547),
         (-6.969283, -69.052137, 267.053295, -6770.253653),
         (-6.873829, -63.926377, 158.728306, -4385.598500),
         (-6.770718, -58.489508, 47.495997, -2032.799236),
         (-6.671272, -52.161708, -86.223867, 276.600717),
         (-6.556479, -46.941523, -147.036377, 1224.512631),
         (-6.439894, -41.993680, -207.740796, 2392.245661),
         (-6.302978, -38.417166, -190.241272, 2334.647409),
         (-6.159019, -35.028191, -157.475224, 2021.419219),
         (-6.017183, -32.684128, -90.021562, 1279.486281),
         (-5.886322, -29.677714, -70.423237, 1031.463739),
         (-5.746611, -25.500024, -112.189765, 1677.166863),
         (-5.596438, -23.460001, -57.930452, 1019.177278),
         (-5.459811, -21.147091, -43.756637, 931.797484),
         (-5.318410, -19.262458, 1.183522, 252.682321),
         (-5.173283, -16.711510, -10.169151, 520.954968),
         (-5.020254, -14.483823, -1.310188, 401.207759),
         (-4.893244, -12.395525, -13.195506, 545.802416),
         (-4.764889, -10.927084, -6.214153, 480.817873),
         (-4.614438, -9.209477, -4.140901, 476.502103),
         (-4.454866, -7.065167, -19.851507, 632.099616),
         (-4.293818, -5.262111, -32.782385, 787.815422),
         (-4.123192, -4.233764, -16.109663, 545.468380),
         (-3.942106, -2.352911, -51.561309, 1070.006310),
         (-3.729388, -1.207811, -45.638500, 967.906712),
         (-3.504872, -0.535547, -39.706951, 916.327618),
         (-3.238195, -0.647167, -18.052307, 792.623948),
         (-2.955989, -2.620572, 85.599935, -697.953567),
         (-2.659038, -1.222196, -35.176282, 1324.610376),
         (-2.154030, 4.455075, -564.559056, 9752.903523)),
    },
    'constant_trend': {
        1: ((-5.084199, -28.760129, -78.945056, -1464.384362),
         (-4.932769, -29.414041, 100.274432, -2708.238342),
         (-4.860661, -24.418291, -5.020482, -1515.510676),
         (-4.750760, -20.107236, -81.329601, -488.315896),
         (-4.642828, -16.838178, -137.410046, 361.579605),
         (-4.544847, -15.995561, -91.222093, -31.360669),
         (-4.445687, -14.263518, -74.267224, -160.402830),
         (-4.335395, -12.914784, -72.761367, 11.907321),
         (-4.228039, -12.287336, -22.178017, -486.575820),
         (-4.110020, -10.557485, -40.580959, -134.023136),
         (-3.995214, -8.455276, -68.514817, 294.894909),
         (-3.867420, -7.618426, -41.785346, 54.125747),
         (-3.739350, -6.612151, -29.149173, -5.740586),
         (-3.596537, -5.901145, -9.798955, -119.361279),
         (-3.448855, -4.615103, -18.225436, 81.342859),
         (-3.305321, -3.789921, -10.007042, 42.874915),
         (-3.171788, -2.801889, -11.415162, 74.244734),
         (-3.025812, -1.925447, -11.489220, 97.886930),
         (-2.878451, -1.106427, -10.605231, 92.499578),
         (-2.742571, -0.384171, -15.302910, 159.190421),
         (-2.603485, 0.184045, -14.435842, 152.853387),
         (-2.458921, 0.491046, -7.318673, 83.643265),
         (-2.308522, 0.899500, -7.755569, 97.504940),
         (-2.181938, 1.123577, -5.936424, 82.905301),
         (-2.056579, 1.296856, -4.246743, 72.577800),
         (-1.909397, 1.478833, -2.801058, 65.729879),
         (-1.747776, 1.665489, -3.152766, 78.603252),
         (-1.584090, 2.025018, -7.314814, 118.133459),
         (-1.406195, 2.169219, -0.717559, 59.256382),
         (-1.199388, 2.363317, 7.502200, -22.138525),
         (-0.941165, 2.749637, 9.254465, -43.222113),
         (-0.658999, 2.952564, 12.256908, -55.268924),
         (-0.317007, 2.772493, 28.625907, -178.102544),
         (0.019978, 4.198689, -4.344600, 191.936265),
         (0.388741, 5.445962, -34.238736, 596.769853),
         (0.962826, 6.042335, 106.110694, -1107.351482)),
        2: ((-5.478313, -37.233340, 34.083607, -3333.193077),
         (-5.358823, -32.267605, -10.674007, -2382.957444),
         (-5.259449, -30.461323, -44.272155, -1558.078810),
         (-5.158188, -24.190906, -186.044651, 155.372714),
         (-5.035953, -21.998897, -222.666867, 1053.774506),
         (-4.917184, -23.870909, -59.508135, -513.012722),
         (-4.826754, -19.616067, -147.065278, 519.807563),
         (-4.727624, -16.835795, -186.253927, 1083.145059),
         (-4.617828, -16.312141, -133.177046, 661.072350),
         (-4.497773, -14.622378, -135.715100, 816.033516),
         (-4.370230, -14.601332, -66.595114, 193.206122),
         (-4.237095, -14.026382, -22.949439, -201.655582),
         (-4.111399, -11.828182, -54.825728, 265.554859),
         (-3.973885, -10.513747, -36.432425, 93.332036),
         (-3.824764, -9.270683, -27.450687, 78.258478),
         (-3.677839, -8.546591, -3.782795, -107.279473),
         (-3.540229, -7.872448, 15.510358, -277.461726),
         (-3.392693, -6.721256, 14.116764, -231.481270),
         (-3.245430, -5.307170, 1.108524, -79.131868),
         (-3.107466, -4.553957, 5.158279, -108.678136),
         (-2.964925, -3.745034, 0.462117, -30.148225),
         (-2.816669, -3.194013, 3.137752, -35.413746),
         (-2.663005, -2.557539, 1.499244, -18.203250),
         (-2.536369, -2.011130, -1.506770, 3.492367),
         (-2.410839, -1.509834, -6.067333, 43.929070),
         (-2.261843, -0.995342, -14.361893, 130.708909),
         (-2.098255, -0.904320, -10.365381, 98.474518),
         (-1.933519, -0.802317, -11.558847, 120.358034),
         (-1.756971, -1.072960, -5.905192, 81.977646),
         (-1.557625, -1.512261, 1.808891, 14.926803),
         (-1.311442, -2.083224, 6.757524, -35.162332),
         (-1.036445, -2.944753, 9.914019, -51.059991),
         (-0.686889, -5.235696, 40.991130, -329.788913),
         (-0.333033, -6.154990, 6.828545, 31.340466),
         (0.068212, -9.082521, -9.375824, 438.640473),
         (0.750985, -21.713257, 258.093992, -2180.568981)),
        3: ((-5.847662, -36.184723, -424.844004, 2821.728756),
         (-5.688221, -34.831857, -275.316046, 1247.524301),
         (-5.597437, -31.579363, -312.810457, 1602.349735),
         (-5.461560, -34.377608, -57.818163, -965.416874),
         (-5.336310, -33.461910, -14.543949, -1022.703608),
         (-5.227846, -33.034523, 74.181742, -1972.580183),
         (-5.118820, -30.723767, 66.961875, -1763.544280),
         (-5.018489, -27.322264, 35.831860, -1459.999524),
         (-4.915643, -25.326270, 39.034566, -1316.509609),
         (-4.800436, -23.299644, 39.363170, -1167.204978),
         (-4.684293, -21.454840, 44.291857, -1021.968610),
         (-4.565341, -17.866837, -26.814989, -98.877015),
         (-4.441791, -16.140022, -14.232006, -185.427960),
         (-4.304335, -14.122092, -22.955727, 18.972073),
         (-4.158658, -12.319407, -20.146836, 52.146772),
         (-4.014183, -11.115146, -0.647728, -115.869282),
         (-3.879875, -9.824234, 7.659378, -181.254616),
         (-3.732118, -8.459067, 6.246789, -118.985179),
         (-3.583171, -7.022572, 1.453535, -49.358002),
         (-3.447581, -5.544715, -14.693583, 141.910032),
         (-3.303059, -4.720047, -12.502253, 154.653658),
         (-3.154646, -4.199322, 2.789485, -2.225879),
         (-3.001518, -3.141881, -7.637461, 113.424916),
         (-2.871573, -2.761316, 0.180578, 31.861165),
         (-2.743961, -2.070820, -8.105240, 116.900011),
         (-2.591671, -1.831812, 1.079263, 20.078711),
         (-2.426562, -1.593535, 5.794164, -23.870536),
         (-2.258834, -1.734296, 20.489607, -173.276963),
         (-2.085179, -1.493827, 13.906149, -85.718552),
         (-1.890851, -1.643046, 18.600685, -134.340524),
         (-1.653902, -2.285082, 32.324652, -257.518769),
         (-1.389362, -3.434122, 54.473712, -481.043696),
         (-1.054311, -4.136873, 34.524192, -222.044714),
         (-0.693219, -4.629519, -12.213341, 320.203315),
         (-0.298698, -7.967586, 40.400288, -186.026018),
         (0.353492, -7.759446, -211.170107, 2993.938506)),
        4: ((-5.926046, -85.714224, 1316.838751, -16776.587586),
         (-5.842422, -61.992993, 470.387178, -7034.261625),
         (-5.758954, -56.821785, 279.669653, -4076.925707),
         (-5.709663, -39.912172, -202.868265, 1032.126150),
         (-5.636381, -32.298574, -367.763234, 2940.361856),
         (-5.558563, -27.837596, -417.950200, 3547.548517),
         (-5.440688, -29.523733, -248.201371, 1931.479310),
         (-5.339547, -27.149359, -231.714369, 1861.979333),
         (-5.232525, -25.719930, -181.985123, 1490.316750),
         (-5.115113, -24.652444, -122.067619, 935.823849),
         (-5.000123, -22.965639, -82.746072, 580.954207),
         (-4.875860, -21.989654, -18.879448, -40.757467),
         (-4.751379, -19.766122, -13.356802, -94.336441),
         (-4.614183, -17.826734, 2.621288, -226.631409),
         (-4.469878, -15.322864, -13.204765, 17.041351),
         (-4.324231, -13.837193, -2.543894, -1.625317),
         (-4.188019, -12.436691, 8.326300, -72.622726),
         (-4.039919, -11.031248, 16.343674, -115.683390),
         (-3.890990, -9.487136, 17.899907, -115.829531),
         (-3.753158, -8.118010, 15.036544, -91.009898),
         (-3.612872, -6.554089, 3.186327, 19.091881),
         (-3.466282, -5.510438, 8.503540, -50.280601),
         (-3.312326, -4.471257, 7.960706, -46.634792),
         (-3.182964, -3.649619, 2.169034, 28.317492),
         (-3.053471, -3.193532, 9.311172, -50.986970),
         (-2.902960, -2.408008, 3.717171, 7.003568),
         (-2.737009, -2.232955, 17.793654, -135.561197),
         (-2.573028, -1.660391, 13.481569, -112.059452),
         (-2.402187, -1.052213, -1.502120, 62.096220),
         (-2.207832, -1.561764, 21.809935, -170.772960),
         (-1.980837, -1.522986, 19.418859, -140.825498),
         (-1.729207, -2.391123, 38.605352, -311.192427),
         (-1.415309, -2.558550, 14.682373, -48.841434),
         (-1.052766, -5.608324, 79.786607, -641.535264),
         (-0.669568, -5.863452, 19.503329, 137.568327),
         (0.025160, -15.420907, 220.089739, -1841.205916)),
        5: ((-6.497452, -24.043448, -1393.569598, 11481.527013),
         (-6.295360, -33.125999, -908.771356, 7358.318911),
         (-6.215648, -32.628970, -770.256654, 6077.682401),
         (-6.103749, -30.556744, -638.277191, 4421.054248),
         (-5.951138, -38.310046, -176.099021, -167.248800),
         (-5.857323, -34.523644, -223.089569, 612.752281),
         (-5.748627, -32.724413, -222.399784, 1125.791397),
         (-5.648521, -28.278452, -314.763589, 2434.822389),
         (-5.521782, -29.093363, -202.896484, 1546.650309),
         (-5.407726, -27.305319, -160.517712, 1145.623593),
         (-5.297792, -24.038344, -180.331025, 1401.218692),
         (-5.175877, -21.957502, -163.951112, 1357.828731),
         (-5.049976, -19.722414, -152.280465, 1294.004627),
         (-4.906974, -18.576068, -109.472448, 1007.924278),
         (-4.759546, -16.964631, -69.655616, 634.054596),
         (-4.614763, -15.633714, -39.282514, 412.470495),
         (-4.480806, -14.120352, -19.469727, 212.230290),
         (-4.334653, -12.236813, -15.251933, 174.085981),
         (-4.184358, -10.891346, 4.555718, -19.534300),
         (-4.044675, -9.783351, 18.701650, -146.832788),
         (-3.905091, -8.043441, 6.353929, -12.004504),
         (-3.757412, -6.790410, 6.488875, -5.629481),
         (-3.602095, -5.707145, 9.081659, -11.209039),
         (-3.470214, -5.173664, 22.290521, -151.091724),
         (-3.340976, -4.516110, 28.350980, -226.852578),
         (-3.189953, -3.674432, 25.551205, -191.785334),
         (-3.027215, -2.806645, 19.820993, -132.084316),
         (-2.862138, -2.234653, 17.832453, -101.847110),
         (-2.689883, -1.792685, 16.752693, -88.745411),
         (-2.501170, -1.443937, 16.520023, -106.518055),
         (-2.278399, -0.993147, 2.338777, 39.186748),
         (-2.038255, -1.104707, -4.682009, 160.433326),
         (-1.735106, -2.893165, 40.886513, -264.479812),
         (-1.395556, -5.104764, 89.730221, -767.767285),
         (-0.988166, -7.399792, 74.032247, -271.348309),
         (-0.248032, -19.816702, 353.259571, -2770.235516)),
        6: ((-6.612359, -71.892664, 428.510289, -8943.576887),
         (-6.453554, -68.932870, 608.234557, -11372.192891),
         (-6.391770, -62.705675, 423.914032, -8384.534601),
         (-6.252195, -60.352870, 394.936465, -7096.826467),
         (-6.135008, -56.815299, 321.177488, -5651.357021),
         (-6.057108, -50.915087, 200.225463, -4060.280205),
         (-5.966011, -45.835979, 115.261874, -2919.460466),
         (-5.875494, -40.216254, -23.669475, -844.117111),
         (-5.776007, -35.775460, -78.826088, -287.861326),
         (-5.665774, -33.200017, -60.640063, -396.073978),
         (-5.552862, -29.646502, -106.372016, 375.845061),
         (-5.436057, -26.335539, -137.936585, 1009.376027),
         (-5.303951, -25.371554, -71.465168, 447.277599),
         (-5.163188, -23.265576, -52.829048, 368.573663),
         (-5.017010, -21.630210, -1.430715, -136.490362),
         (-4.879320, -18.791793, -19.173367, 121.164587),
         (-4.745824, -16.983808, -0.457017, -59.875403),
         (-4.603864, -14.777937, -2.659214, 50.067446),
         (-4.454296, -12.921075, 1.060382, 76.505007),
         (-4.317695, -11.289933, 8.090647, -28.784203),
         (-4.176046, -9.628903, 3.538621, 41.131859),
         (-4.028035, -8.366384, 10.621174, -11.547678),
         (-3.873856, -7.032350, 13.476786, -42.558755),
         (-3.744714, -6.153774, 22.379670, -153.328940),
         (-3.617896, -5.009045, 14.239055, -63.199650),
         (-3.466212, -4.057266, 14.560567, -70.710780),
         (-3.300297, -3.574825, 29.824429, -234.128234),
         (-3.135986, -2.906420, 31.949570, -264.743699),
         (-2.966427, -2.094652, 25.929689, -228.318850),
         (-2.778144, -1.864150, 33.666656, -296.606031),
         (-2.562269, -0.645291, 1.015646, 11.089794),
         (-2.324733, -0.794031, -2.423453, 106.694892),
         (-2.038341, -1.090462, -18.798195, 417.999029),
         (-1.718175, -2.357760, -19.366066, 576.221453),
         (-1.361263, -2.820037, -39.340599, 770.016569),
         (-0.692410, -4.244189, -140.513947, 2115.957922)),
        7: ((-6.858819, -74.554198, 242.494340, -6395.735048),
         (-6.744268, -65.340657, 73.870990, -4647.741554),
         (-6.676152, -60.405443, 38.779695, -4559.391548),
         (-6.522990, -56.932330, -43.987021, -2632.759830),
         (-6.393141, -59.216157, 219.770576, -5360.201808),
         (-6.334602, -49.573947, -48.784320, -2010.419381),
         (-6.223933, -47.598398, -4.407891, -2215.287738),
         (-6.106075, -47.050707, 98.812144, -2994.283660),
         (-6.010724, -41.959751, -19.292620, -1172.189227),
         (-5.895987, -39.740204, 10.359751, -1222.889971),
         (-5.783378, -36.749919, 18.117249, -1142.114464),
         (-5.668642, -32.323705, -53.145178, -41.682387),
         (-5.550136, -29.030229, -64.636755, 200.194359),
         (-5.413204, -26.713324, -38.324321, 64.166479),
         (-5.269561, -24.341086, -3.982708, -323.288719),
         (-5.128626, -22.004699, -2.222830, -143.892524),
         (-4.996015, -19.830981, -1.589018, 9.933165),
         (-4.850435, -17.885119, 20.190783, -196.603846),
         (-4.698890, -16.339592, 52.011296, -535.238313),
         (-4.561847, -14.592905, 55.934247, -524.356894),
         (-4.423220, -12.366167, 39.761015, -335.525024),
         (-4.277645, -10.621742, 38.731834, -325.797860),
         (-4.126147, -8.867006, 33.962886, -271.491128),
         (-3.997712, -7.592265, 32.029603, -252.981889),
         (-3.869337, -6.446561, 28.337842, -207.340243),
         (-3.717346, -5.547275, 36.632282, -284.544794),
         (-3.555312, -4.279565, 28.015699, -206.867883),
         (-3.391323, -3.631665, 37.567744, -305.620348),
         (-3.221025, -3.117858, 48.514295, -448.314989),
         (-3.035169, -2.669304, 55.852638, -533.138016),
         (-2.814347, -2.442796, 57.819874, -495.027500),
         (-2.586690, -1.153135, 0.770515, 209.663705),
         (-2.301738, -1.726043, 7.955130, 176.667741),
         (-1.981846, -5.493164, 121.123841, -971.758375),
         (-1.645370, -6.183516, 83.634944, -251.576537),
         (-0.956488, -23.106187, 731.549885, -7886.421142)),
        8: ((-7.188670, -51.663868, -1326.304809, 11466.232398),
         (-7.025767, -47.778512, -1275.175773, 11727.836446),
         (-6.909145, -55.732015, -570.084048, 2196.309081),
         (-6.776635, -55.609552, -371.288805, 330.773131),
         (-6.673313, -52.437974, -334.867757, 632.360645),
         (-6.575059, -51.776858, -217.128368, -110.123646),
         (-6.474487, -49.584145, -162.402737, -528.339067),
         (-6.360225, -48.050788, -119.592851, -282.124902),
         (-6.254533, -45.751053, -77.312860, -389.783805),
         (-6.157929, -39.497972, -212.787007, 1514.053513),
         (-6.034245, -37.654520, -169.211878, 1328.441686),
         (-5.903427, -36.749329, -54.835379, 85.918556),
         (-5.778500, -34.471918, -5.376180, -462.500946),
         (-5.647086, -30.861924, -28.919154, 84.013436),
         (-5.502671, -28.654474, 33.639148, -631.895036),
         (-5.369770, -24.704895, -9.394929, -18.179728),
         (-5.236476, -22.523144, 2.920757, -33.987368),
         (-5.091427, -19.873299, -4.033771, 169.465249),
         (-4.941851, -17.909532, 18.665125, -78.921730),
         (-4.805294, -15.851283, 21.057945, -97.106598),
         (-4.664906, -13.582109, 5.030550, 135.680141),
         (-4.516732, -12.228561, 26.388957, -82.283834),
         (-4.362226, -10.694058, 35.695245, -173.745774),
         (-4.235918, -8.985571, 22.232856, -21.908225),
         (-4.109810, -7.436877, 11.418757, 81.246895),
         (-3.959490, -6.201901, 15.164354, 41.321335),
         (-3.796599, -5.057537, 19.255218, -6.911768),
         (-3.633279, -3.939047, 15.989162, 10.762012),
         (-3.461870, -3.121248, 18.719736, -57.251429),
         (-3.276901, -2.580122, 29.218209, -189.645168),
         (-3.064995, -1.031481, -6.184054, 190.723947),
         (-2.836561, -0.386517, -20.304802, 324.757480),
         (-2.568329, -0.468072, -12.841240, 280.866743),
         (-2.268898, -3.040036, 62.240247, -436.776188),
         (-1.900595, -7.872130, 182.448999, -1557.200331),
         (-1.292389, -8.226371, 63.310789, 64.724671)),
        9: ((-7.301069, -72.882842, -712.045577, 5500.120349),
         (-7.206279, -62.586605, -870.047591, 8210.256811),
         (-7.101338, -65.988511, -471.004636, 2471.371227),
         (-6.987355, -61.625148, -494.447863, 3669.445111),
         (-6.893721, -54.980885, -597.765048, 5005.272302),
         (-6.802948, -49.618585, -668.314560, 6045.881203),
         (-6.690538, -52.004690, -358.011446, 2411.911917),
         (-6.587619, -48.437596, -395.051435, 3633.707520),
         (-6.484186, -46.253246, -310.272075, 2627.982493),
         (-6.371416, -45.244948, -163.337508, 854.729449),
         (-6.252398, -43.120609, -109.887504, 546.502389),
         (-6.129521, -40.179450, -89.197713, 526.416815),
         (-6.005531, -37.050668, -68.696517, 374.980832),
         (-5.877118, -33.155971, -84.488639, 740.394176),
         (-5.732245, -30.815778, -21.523310, 61.837518),
         (-5.588773, -29.204244, 54.988251, -771.450841),
         (-5.454573, -26.815445, 60.547257, -661.567748),
         (-5.314363, -23.416710, 41.430347, -425.254921),
         (-5.170297, -20.491130, 32.303620, -225.523929),
         (-5.033722, -18.168422, 32.876431, -216.049877),
         (-4.891316, -16.416566, 52.054806, -416.852595),
         (-4.746557, -14.202064, 45.728492, -303.494689),
         (-4.593854, -12.272531, 50.620059, -381.305007),
         (-4.465233, -10.766505, 44.238807, -237.469388),
         (-4.337007, -9.391733, 41.835286, -186.627838),
         (-4.186280, -8.044316, 47.400611, -251.180068),
         (-4.025149, -6.413781, 38.153413, -143.291404),
         (-3.865277, -4.500512, 3.205255, 308.841764),
         (-3.695991, -3.529961, 8.636020, 204.135326),
         (-3.511771, -2.574564, 7.097352, 223.955972),
         (-3.296842, -1.905218, 15.607979, 66.303693),
         (-3.071194, -1.578725, 27.484731, -109.750041),
         (-2.813263, 0.660783, -69.631509, 1100.235228),
         (-2.523600, -1.234861, -29.242110, 917.513853),
         (-2.205130, 0.672162, -184.072875, 3088.777947),
         (-1.641083, 0.007723, -268.754330, 4387.182553)),
        10: ((-7.450200, -114.765298, 1496.608576, -29760.294032),
         (-7.375223, -83.425266, -46.097113, -5177.461889),
         (-7.344422, -67.217987, -728.015493, 5331.468655),
         (-7.165732, -73.179081, -329.718865, 1848.367019),
         (-7.079960, -68.091817, -215.133055, 12.144407),
         (-7.009256, -61.494395, -328.619127, 1825.175196),
         (-6.911487, -55.843323, -480.940032, 4822.836267),
         (-6.806316, -53.390231, -411.226144, 4100.221588),
         (-6.701208, -50.632240, -348.777126, 3391.608445),
         (-6.584638, -50.383935, -136.480235, 620.864638),
         (-6.466989, -46.956664, -133.229787, 798.278045),
         (-6.349323, -42.144381, -187.522377, 1706.093023),
         (-6.222589, -40.456297, -76.941413, 325.437231),
         (-6.087842, -37.656218, -44.471564, 296.430457),
         (-5.948593, -33.662759, -50.695378, 455.753290),
         (-5.808878, -30.392377, -49.664725, 571.219579),
         (-5.675881, -28.191654, -3.038472, -5.300075),
         (-5.532028, -25.735829, 38.041492, -547.350900),
         (-5.383238, -23.164723, 51.729580, -611.596427),
         (-5.246918, -20.845921, 53.016580, -472.252888),
         (-5.107282, -18.410541, 52.435465, -449.050366),
         (-4.961420, -16.398870, 62.200612, -543.184440),
         (-4.808698, -14.240106, 66.783527, -627.279264),
         (-4.679506, -12.757558, 79.923110, -832.085333),
         (-4.550894, -11.587883, 101.384256, -1148.786129),
         (-4.400427, -10.187337, 111.904958, -1290.481450),
         (-4.240860, -8.072043, 80.554165, -839.534934),
         (-4.077124, -6.967496, 93.492254, -1050.010347),
         (-3.907743, -5.830158, 95.502388, -1080.252911),
         (-3.727186, -4.254637, 77.923363, -880.779206),
         (-3.515158, -2.978461, 61.721987, -660.031464),
         (-3.279310, -4.226871, 134.984627, -1474.126082),
         (-3.026180, -2.589029, 93.840237, -1081.800944),
         (-2.771849, 1.048503, -85.779303, 1248.433749),
         (-2.450637, -1.488438, -19.635803, 517.957704),
         (-1.864658, -10.461018, 186.585577, -520.262579)),
        11: ((-7.594618, -120.856943, 1059.142562, -20298.649215),
         (-7.585158, -78.976965, -863.331990, 9263.650242),
         (-7.525615, -73.046958, -916.154491, 9719.582242),
         (-7.395396, -71.356607, -720.278101, 6973.759895),
         (-7.270158, -72.557479, -461.723918, 4524.013465),
         (-7.180167, -69.076506, -321.304244, 2224.451417),
         (-7.082225, -66.455440, -219.075570, 620.367374),
         (-6.972513, -65.488826, -82.362554, -636.090482),
         (-6.875597, -59.124949, -252.612339, 2426.490516),
         (-6.776387, -55.003450, -261.388839, 3117.673545),
         (-6.662645, -52.343716, -144.487882, 1450.724761),
         (-6.549227, -48.111075, -132.057150, 1276.335316),
         (-6.423545, -45.207652, -103.346879, 1415.564532),
         (-6.282521, -42.723555, -14.832078, 230.283386),
         (-6.147482, -37.940585, -31.566846, 440.067031),
         (-6.010591, -34.709511, -9.158599, 335.868321),
         (-5.879362, -31.527728, -15.087751, 572.284372),
         (-5.742635, -27.179489, -59.808069, 1209.901787),
         (-5.596887, -23.927765, -62.471583, 1291.563251),
         (-5.464466, -21.102496, -53.161500, 1060.555800),
         (-5.320282, -19.619227, 0.636040, 369.810638),
         (-5.173510, -17.579039, 24.726431, 14.497763),
         (-5.019243, -15.525643, 43.401027, -232.780088),
         (-4.890481, -13.858991, 46.166712, -197.491398),
         (-4.764789, -12.015419, 40.401183, -126.959959),
         (-4.615613, -9.954059, 24.520559, 128.020314),
         (-4.451972, -8.793169, 59.020844, -382.713960),
         (-4.288902, -7.675261, 81.801520, -733.544564),
         (-4.118618, -6.449641, 87.302545, -828.582596),
         (-3.936736, -4.643381, 59.650848, -487.228955),
         (-3.724660, -3.592989, 72.909126, -715.406903),
         (-3.505080, -2.404023, 51.718480, -340.769551),
         (-3.247819, -1.026744, 4.303876, 418.453543),
         (-2.974800, -1.112988, 14.863255, 252.707501),
         (-2.698276, 1.778177, -97.209044, 1173.769266),
         (-2.104591, -7.284168, 95.513745, -836.782347)),
        12: ((-7.917484, -96.939461, -320.375512, -5986.782256),
         (-7.780857, -89.931585, -223.224196, -6138.610060),
         (-7.698365, -82.720364, -580.389542, 1797.172252),
         (-7.591664, -80.445967, -414.021301, 1653.549335),
         (-7.485122, -74.729983, -480.287047, 3320.362157),
         (-7.368646, -75.431421, -229.690220, 117.542702),
         (-7.275479, -73.866000, -48.535011, -2213.413399),
         (-7.179084, -68.641872, -157.093766, 301.099306),
         (-7.090140, -62.282916, -266.732148, 2198.197065),
         (-6.982434, -56.704148, -345.324402, 3559.394259),
         (-6.873048, -53.257813, -282.266635, 2830.971464),
         (-6.755254, -49.568596, -265.753127, 2862.008101),
         (-6.633773, -47.317303, -114.484223, 376.702591),
         (-6.498918, -44.044787, -57.525274, -249.131051),
         (-6.348867, -41.491767, -15.157532, -96.946325),
         (-6.210651, -37.682820, -21.506542, 322.150444),
         (-6.078121, -34.775686, 9.905440, 28.079995),
         (-5.931378, -32.193956, 57.734867, -534.103056),
         (-5.787223, -28.692124, 54.491912, -397.071548),
         (-5.652247, -26.157255, 76.708926, -682.612703),
         (-5.514255, -22.868679, 49.055374, -248.091012),
         (-5.369581, -20.338155, 54.700561, -283.086000),
         (-5.218896, -17.559095, 46.443979, -142.668161),
         (-5.093209, -14.970583, 13.359162, 364.056843),
         (-4.965365, -13.358633, 30.312677, 47.615568),
         (-4.815986, -11.244380, 24.203044, 103.613392),
         (-4.653059, -9.574512, 30.829021, 88.823965),
         (-4.490673, -7.914583, 33.534031, 7.747192),
         (-4.323398, -6.202408, 26.703515, 80.094971),
         (-4.140370, -4.818581, 34.122054, -109.456542),
         (-3.929967, -2.729275, -3.693525, 388.841879),
         (-3.704531, -3.229924, 67.174952, -492.893525),
         (-3.451528, -1.499498, 30.331998, -46.802277),
         (-3.182528, -1.502941, 41.170526, -85.320520),
         (-2.888637, -1.260395, -10.737402, 755.592279),
         (-2.355872, -10.147687, 474.471166, -7294.971156)),
    },
}

N_MIN = {'none': {1: 17, 2: 17, 3: 17, 4: 17, 5: 17, 6: 17, 7: 18, 8: 19, 9: 20, 10: 21, 11: 22, 12: 23}, 'constant': {1: 17, 2: 17, 3: 17, 4: 17, 5: 17, 6: 17, 7: 18, 8: 19, 9: 20, 10: 21, 11: 22, 12: 23}, 'constant_trend': {1: 17, 2: 17, 3: 17, 4: 17, 5: 17, 6: 17, 7: 18, 8: 19, 9: 20, 10: 21, 11: 22, 12: 23}}
