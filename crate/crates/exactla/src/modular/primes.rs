/// The 200 largest primes below 2^61, descending.
pub const PRIME_POOL: [u64; 200] = [
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
    2305843009213693549,
    2305843009213693487,
    2305843009213693421,
    2305843009213693373,
    2305843009213693277,
    2305843009213693193,
    2305843009213693153,
    2305843009213693133,
    2305843009213693123,
    2305843009213693109,
    2305843009213693093,
    2305843009213693013,
    2305843009213692967,
    2305843009213692937,
    2305843009213692799,
    2305843009213692757,
    2305843009213692737,
    2305843009213692671,
    2305843009213692653,
    2305843009213692601,
    2305843009213692581,
    2305843009213692527,
    2305843009213692463,
    2305843009213692427,
    2305843009213692419,
    2305843009213692409,
    2305843009213692343,
    2305843009213692331,
    2305843009213692283,
    2305843009213692211,
    2305843009213692199,
    2305843009213692139,
    2305843009213692107,
    2305843009213692103,
    2305843009213692097,
    2305843009213692089,
    2305843009213692083,
    2305843009213692043,
    2305843009213692031,
    2305843009213692029,
    2305843009213692007,
    2305843009213691993,
    2305843009213691929,
    2305843009213691869,
    2305843009213691837,
    2305843009213691819,
    2305843009213691767,
    2305843009213691581,
    2305843009213691579,
    2305843009213691569,
    2305843009213691567,
    2305843009213691551,
    2305843009213691413,
    2305843009213691401,
    2305843009213691357,
    2305843009213691347,
    2305843009213691287,
    2305843009213691257,
    2305843009213691041,
    2305843009213691033,
    2305843009213690937,
    2305843009213690907,
    2305843009213690883,
    2305843009213690873,
    2305843009213690871,
    2305843009213690847,
    2305843009213690813,
    2305843009213690801,
    2305843009213690799,
    2305843009213690769,
    2305843009213690657,
    2305843009213690627,
    2305843009213690621,
    2305843009213690591,
    2305843009213690589,
    2305843009213690579,
    2305843009213690543,
    2305843009213690511,
    2305843009213690487,
    2305843009213690327,
    2305843009213690283,
    2305843009213690159,
    2305843009213690153,
    2305843009213690117,
    2305843009213690087,
    2305843009213690057,
    2305843009213690039,
    2305843009213690021,
    2305843009213690019,
    2305843009213689949,
    2305843009213689937,
    2305843009213689877,
    2305843009213689833,
    2305843009213689811,
    2305843009213689767,
    2305843009213689733,
    2305843009213689709,
    2305843009213689601,
    2305843009213689593,
    2305843009213689559,
    2305843009213689521,
    2305843009213689509,
    2305843009213689493,
    2305843009213689487,
    2305843009213689479,
    2305843009213689427,
    2305843009213689377,
    2305843009213689353,
    2305843009213689293,
    2305843009213689229,
    2305843009213689223,
    2305843009213689203,
    2305843009213689163,
    2305843009213689157,
    2305843009213689133,
    2305843009213689089,
    2305843009213689067,
    2305843009213688983,
    2305843009213688909,
    2305843009213688873,
    2305843009213688849,
    2305843009213688783,
    2305843009213688741,
    2305843009213688689,
    2305843009213688669,
    2305843009213688663,
    2305843009213688647,
    2305843009213688603,
    2305843009213688569,
    2305843009213688563,
    2305843009213688479,
    2305843009213688423,
    2305843009213688387,
    2305843009213688359,
    2305843009213688291,
    2305843009213688233,
    2305843009213688227,
    2305843009213688173,
    2305843009213688159,
    2305843009213688141,
    2305843009213688093,
    2305843009213688011,
    2305843009213688003,
    2305843009213687921,
    2305843009213687903,
    2305843009213687891,
    2305843009213687871,
    2305843009213687849,
    2305843009213687813,
    2305843009213687673,
    2305843009213687607,
    2305843009213687597,
    2305843009213687577,
    2305843009213687519,
    2305843009213687483,
    2305843009213687481,
    2305843009213687417,
    2305843009213687399,
    2305843009213687369,
    2305843009213687331,
    2305843009213687297,
    2305843009213687247,
    2305843009213687217,
    2305843009213687127,
    2305843009213687123,
    2305843009213687121,
    2305843009213687063,
    2305843009213687061,
    2305843009213687051,
    2305843009213687049,
    2305843009213686953,
    2305843009213686941,
    2305843009213686937,
    2305843009213686869,
    2305843009213686793,
    2305843009213686731,
    2305843009213686707,
    2305843009213686619,
    2305843009213686557,
    2305843009213686463,
    2305843009213686431,
    2305843009213686403,
    2305843009213686401,
    2305843009213686377,
    2305843009213686361,
    2305843009213686317,
    2305843009213686181,
    2305843009213686157,
    2305843009213686101,
    2305843009213686011,
    2305843009213685989,
    2305843009213685923,
];
