// Generated by tools/gen_oracles.py — high-precision reference values
// (mpmath, 50 significant digits), frozen.  Do not edit by hand.

pub const LAMBDA_XI_ROWS: [(f64, f64, i32, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64); 21] = [
    (0.05, 0.25, 0, 8.752015119380639, 2.753466956909798e-103, -32.15571232853904, -8.127033854499746e-53, 267.88967859315096, 6.519976234143453e-52, -45.95692523557478, -4.9766301608748295e-102, 553.0720392200228, -3.432645914294696e-59, -8842.501307544964, -2.6240935433886844e-57),
    (0.05, 0.5, 0, 4.883499665347101, 8.57286840264978e-104, -7.208713381091272, -4.203255355772274e-53, 32.336838075640635, 1.7600249746458877e-52, -5.547438996535864, -1.4229506798060091e-64, 35.0475933898719, 4.452724080707079e-60, -275.57471223820016, -3.0434040168326013e-58),
    (0.05, 1.0, 0, 3.141592653589793, -8.058525312460172e-65, -2.09034092766872, -1.7167024276767073e-53, -3.3802970738367487e-51, 7.303132597925977e-53, 7.079118551564633e-52, 3.669494099229995e-65, 4.285602428758467, -1.0589838127355267e-60, -5.7437162495788365e-53, -2.4257157183248767e-59),
    (0.05, 0.0, 1, 0.0, -1.6192705146235346e-51, 4.79956601763617, 2.6754492424077e-60, 1.2574617329249802e-58, 4.368930100134925e-52, 0.0, -1.1752606614200074e-51, 3.4799940812916876, -1.713342541950503e-60, -4.36725405214479e-53, -5.866875963937588e-59),
    (0.05, 0.25, 1, 1.1500411531512984, -1.42506061089721e-51, 4.223922101664759, -8.130449734811143e-54, -4.172856234206778, 4.488800996078833e-52, 0.7158605101224903, -5.949679073521848e-52, 1.7635026008219348, -2.768310316010488e-60, -11.264041962293716, -8.499427838086671e-60),
    (0.05, 0.5, 1, 2.0595064934021887, -1.0215928116207587e-51, 3.028031525753832, -1.3711233751756103e-53, -4.7705272426857634, 4.7369886379411e-52, 0.8183919775399198, 2.5734355392270995e-52, -0.762773959804162, -9.272908494996061e-61, -7.277768989878704, 2.1557085889584256e-59),
    (0.05, 1.0, 1, 3.141592653589793, -5.7759014598726654e-52, 1.7119943984719581, -1.716701991931208e-53, 2.3050062593488132e-51, 5.008819355816201e-52, -3.1723629509110307e-52, 6.479373260915875e-52, -1.9205055358654506, 1.360638053893707e-60, 2.481555367310367e-53, 2.507776271102514e-59),
    (0.2, 0.25, 0, 15.590234219847565, 8.737082379908423e-103, -62.63394052975247, -7.0893781652929255e-53, 498.8740675395867, 5.683025350812403e-52, -150.23407427419593, -2.9517586035052874e-101, 1806.9227622753992, 2.1978850744422107e-58, -28891.86726817186, -6.42841689433582e-57),
    (0.2, 0.5, 0, 7.7032419995193075, 2.133087761185445e-103, -16.123690241928536, -4.0671057663735384e-53, 60.52252960528431, 1.68669017641352e-52, -18.226135210487747, -1.8129554447542435e-102, 114.52034500387748, 1.7559595469284156e-60, -899.4440797479601, -2.270921532533706e-59),
    (0.2, 1.0, 0, 3.141592653589793, 3.5478013034166324e-104, -6.491412170907091, -1.7753473949561877e-53, 3.932744069855193e-50, 6.984419805617018e-53, -1.478068626757106e-50, 2.281303039256344e-64, 14.3139631296121, -3.141704877713523e-60, -1.9163664537915155e-52, -2.122025333608615e-58),
    (0.2, 0.0, 1, 0.0, -2.0784034474291022e-51, 3.309662012663747, 1.0634439474675246e-60, 5.772321230024017e-59, -5.011319047009114e-53, 0.0, -3.181245068242558e-52, 0.5060716795784291, -2.0317478084651398e-61, -6.442284679756896e-54, -2.390172076637038e-62),
    (0.2, 0.25, 1, 0.8231787921447011, -2.0471654024921586e-51, 3.2599183804096827, -4.661728490686108e-54, -0.3763186601887014, -4.954998538198637e-53, 0.11332696811519276, -2.2082748052370187e-52, 0.3516469952952589, -4.0442588287033416e-61, -1.1595838683278075, 2.16797172493352e-60),
    (0.2, 0.5, 1, 1.6240621234734702, -1.9724027580633604e-51, 3.1408659001143557, -9.191450460966858e-54, -0.5256925097219537, -4.820287686828677e-53, 0.15831034862257992, 5.425731388802941e-54, -0.008639966980680844, -1.0733385558480588e-61, -1.5619300363309774, 2.6128544814653166e-60),
    (0.2, 1.0, 1, 3.141592653589793, -1.8682276445643793e-51, 2.9749768288829004, -1.7753479963547967e-53, -1.029423029342659e-51, -4.632765628244867e-53, 5.0472801319689146e-52, 3.069509002468141e-52, -0.48879044183717174, 3.535092939345416e-61, 6.232879250127651e-54, 4.595657677713154e-60),
    (0.2281902101303643, 0.25, 0, 16.9113916858874, 1.0280640425429297e-102, -68.50408267596208, -6.855748093666504e-53, 543.3952919768722, 5.495474546266519e-52, -199.21630061488995, -4.2534092848335856e-101, 2396.047509096338, -1.415123793199027e-58, -38311.710764368836, -8.893207738321975e-57),
    (0.2281902101303643, 0.5, 0, 8.25043136828367, 2.4468939166479554e-103, -17.842967245011863, -4.029114113567895e-53, 65.92452302674819, 1.6706603621219356e-52, -24.168850542320996, -6.199452095066072e-64, 151.8583253038355, -1.6660168813121416e-59, -1192.6940038582145, -1.6215360164281957e-57),
    (0.2281902101303643, 1.0, 0, 3.141592653589793, -8.057762664463496e-65, -7.350819771902379, -1.7754815892882228e-53, -4.024831853892463e-51, 6.96211694638159e-53, 1.2448873252633129e-50, 3.295226047391691e-64, 18.981811324309632, -1.7682795322957887e-59, -2.5413006181542603e-52, 2.6502962486080907e-58),
    (0.2281902101303643, 0.0, 1, 0.0, -2.221233927029459e-51, 3.2473089888142734, 1.0686419488206634e-60, 6.107996116823355e-59, -9.680560752803555e-53, 0.0, -2.638943258736612e-52, 0.38540765774284436, 3.844135453772186e-61, -4.908005343737387e-54, 2.184067859923575e-60),
    (0.2281902101303643, 0.25, 1, 0.8091751568492052, -2.1999254682991913e-51, 3.2161573333635403, -4.5692927310697887e-54, -0.2359210395291056, -9.64805609184027e-53, 0.08649194688681257, -1.8454235553517475e-52, 0.26978970816202, 1.0931302459481387e-62, -0.8718084861227307, 1.3017765420741774e-60),
    (0.2281902101303643, 0.5, 1, 1.6043623320285085, -2.1487402815993122e-51, 3.141327701207107, -9.061681624520612e-54, -0.3312790101846643, -9.57000371005397e-53, 0.1214515102629196, 2.623029257203292e-54, -0.0038347093584463914, -3.182770914898517e-61, -1.198542148551333, -4.775824196067836e-60),
    (0.2281902101303643, 1.0, 1, 3.141592653589793, -2.076971583582667e-51, 3.036406226476012, -1.7754813161602266e-53, 3.639856334221802e-52, -9.460644604396387e-53, -2.477325777273993e-52, 2.583814969804968e-52, -0.37773804535376176, 4.222057560695873e-62, 4.8150688417809594e-54, -7.783919142843257e-60),
];

pub const XI_DPSI_N1_PSI0_Q02: f64 = 3.309662012663747;

pub const XI_SUP_SCAN: [(f64, f64, f64, f64, f64, f64, f64); 1] = [
    (0.25, 0.75, 2.0, 0.05, 0.15, 1.5, 3.493472865502833),
];

pub const XI_DPSI_SUP_SCAN: [(f64, f64, f64, f64, f64, f64, f64); 1] = [
    (0.1, 0.2, 1.5, 0.25, 0.75, 2.0, 3.7654741588865277),
];
