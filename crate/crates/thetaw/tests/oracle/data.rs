// Generated by tools/gen_oracles.py — high-precision reference values
// (mpmath, 50 significant digits), frozen.  Do not edit by hand.

pub const THETA1_Z: [(f64, f64, f64, usize, f64, f64); 30] = [
    (0.25, 0.0, 0.3, 0, 0.2764176085566785, 0.0),
    (0.25, 0.0, 0.3, 1, 1.143437465235748, 0.0),
    (0.25, 0.0, 0.3, 2, 0.42547924828128614, 0.0),
    (0.25, 0.0, 0.3, 3, 1.1550106786467922, 0.0),
    (0.25, 0.0, 0.3, 4, -6.350823520752627, 0.0),
    (0.7, 0.2, 0.3, 0, 0.8357816535799015, 0.26956018885672084),
    (0.7, 0.2, 0.3, 1, 1.3861904773058216, 0.029860986422311987),
    (0.7, 0.2, 0.3, 2, 0.2687117348578871, -0.5835815568792111),
    (0.7, 0.2, 0.3, 3, -3.1124021995512376, -1.839792515555152),
    (0.7, 0.2, 0.3, 4, -10.430243766864997, 2.9532339719964824),
    (1.1, -0.4, 0.3, 0, 1.4612585025938736, -0.47711559487452637),
    (1.1, -0.4, 0.3, 1, 1.454765677496021, 0.6231470277864501),
    (1.1, -0.4, 0.3, 2, -1.696604164101126, 2.1321508873888697),
    (1.1, -0.4, 0.3, 3, -7.516129640196107, -1.050947291741995),
    (1.1, -0.4, 0.3, 4, 2.7025488816981946, -18.090551879953935),
    (0.25, 0.0, 0.5, 0, 0.15402306881556105, 0.0),
    (0.25, 0.0, 0.5, 1, 0.7485316250383709, 0.0),
    (0.25, 0.0, 0.5, 2, 1.5595221002865587, 0.0),
    (0.25, 0.0, 0.5, 3, 5.616570275303342, 0.0),
    (0.25, 0.0, 0.5, 4, -8.173991224145027, 0.0),
    (0.7, 0.2, 0.5, 0, 0.6615789925617933, 0.3650561364344418),
    (0.7, 0.2, 0.5, 1, 1.876033938867986, 0.5238421585678278),
    (0.7, 0.2, 0.5, 2, 3.080115549781436, -0.745459891537357),
    (0.7, 0.2, 0.5, 3, -3.3066700258984807, -7.111162264370997),
    (0.7, 0.2, 0.5, 4, -40.55108627168554, -7.188873647802077),
    (1.1, -0.4, 0.5, 0, 1.6673155776574193, -1.0070476485683058),
    (1.1, -0.4, 0.5, 1, 3.4263998914213802, 0.5563861075364506),
    (1.1, -0.4, 0.5, 2, -0.792192760328151, 7.614810319125414),
    (1.1, -0.4, 0.5, 3, -29.682376084752576, 6.236423684013695),
    (1.1, -0.4, 0.5, 4, -40.37462557176756, -91.87893934173923),
];

pub const THETA1_X_GRID: [(usize, usize, usize, usize, f64, f64); 21] = [
    (0, 0, 0, 0, 0.05065683637250069, 0.15188442465953655),
    (0, 0, 0, 1, 0.6009357490485395, 0.46138473508537875),
    (0, 0, 0, 2, 2.8369583740978097, 4.522043072603785),
    (0, 0, 0, 3, 28.623855035986896, -3.064119603832166),
    (0, 0, 1, 0, -0.05579549543705056, 0.17210750280129078),
    (0, 0, 1, 1, -0.46617336441979157, 0.9191469062439643),
    (0, 0, 1, 2, 2.860265769150402, 9.441617399787294),
    (0, 0, 1, 3, 33.81970406245951, 6.362241996710017),
    (0, 1, 0, 0, 0.18877413401830245, 0.2689614409922077),
    (0, 1, 0, 1, 1.3459579181356827, 1.068827567448675),
    (0, 1, 0, 2, 7.02251814969304, 3.258528308140132),
    (0, 1, 0, 3, 25.336671044052803, -15.815489886344002),
    (0, 1, 1, 0, -0.07097380565347151, 0.41870952277149154),
    (0, 1, 1, 1, 0.4389463769450653, 2.3694074054071304),
    (0, 1, 1, 2, 9.853640930188826, 9.332280128776588),
    (0, 1, 1, 3, 58.54019136935964, -16.42852731528604),
    (1, 0, 0, 0, -0.7137601018875304, -0.776382605762112),
    (1, 0, 0, 1, 1.8800888805940286, 5.549728384189258),
    (1, 0, 0, 2, 25.064269238002506, -21.870630096833278),
    (2, 0, 0, 0, 0.10380585182611045, 0.15802930636967122),
    (2, 0, 0, 1, 1.1904502358051674, 1.271332549316708),
];

pub const BASE_THETA: [(f64, f64, f64, usize, f64, f64); 8] = [
    (0.3, 0.1, 1.0, 0, 0.9678339945005642, -0.055105662055664265),
    (0.3, 0.1, 1.0, 1, -0.6217100914616738, 0.11262789039041979),
    (-0.2, 0.45, 1.0, 0, 1.2256909154487223, 0.6928082211389931),
    (-0.2, 0.45, 1.0, 1, 4.387278222561567, -1.4030654678338816),
    (0.3, 0.1, 0.6, 0, 0.8853866995382047, -0.1926328130971145),
    (0.3, 0.1, 0.6, 1, -2.169861338559137, 0.41276863000072106),
    (-0.2, 0.45, 0.6, 0, 1.6728095167687655, 2.521307544040364),
    (-0.2, 0.45, 0.6, 1, 16.508450019779016, -3.41861337522725),
];

pub const THETA3_NULL_LEMNISCATIC: f64 = 1.086434811213308;

pub const ETA1: [(f64, f64, f64); 3] = [
    (1.0, 1.0, 0.7853981633974483),
    (1.0, 1.5, 0.8208737031054675),
    (0.8, 1.3, 1.0271758363254804),
];

pub const ZETA_W: [(f64, f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.0, 1.0, 1.0, 3.32801202568171, 0.0),
    (0.25, 0.3, 1.0, 1.0, 1.6495383498090355, -1.9729704592942714),
    (-0.4, 0.15, 1.0, 1.0, -2.1845285773281042, -0.8354589322723656),
    (0.3, 0.0, 0.8, 1.3, 3.324036481341363, 0.0),
    (0.25, 0.3, 0.8, 1.3, 1.65691747275172, -1.9759316397637428),
    (-0.4, 0.15, 0.8, 1.3, -2.179935209769753, -0.8465079577933295),
];

pub const P_W: [(f64, f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.0, 1.0, 1.0, 11.164372709004045, 1.922892667925329e-60),
    (0.25, 0.3, 1.0, 1.0, -1.198513361274453, -6.36160383283975),
    (-0.4, 0.15, 1.0, 1.0, 4.209205825064888, 3.5314350884919916),
    (0.3, 0.0, 0.8, 1.3, 11.206154045648281, 1.6779706220725152e-60),
    (0.25, 0.3, 0.8, 1.3, -1.222236666024401, -6.305790472210973),
    (-0.4, 0.15, 0.8, 1.3, 4.267186991957587, 3.461598664980232),
];

pub const P_DER_W: [(f64, f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.0, 1.0, 1.0, -73.71786398270238, -1.83348810633244e-59),
    (0.25, 0.3, 1.0, 1.0, 29.546907959328973, 16.84331172052364),
    (-0.4, 0.15, 1.0, 1.0, 11.70384093114866, 22.766929533529535),
    (0.3, 0.0, 0.8, 1.3, -73.40485408903375, 2.4370191679416967e-60),
    (0.25, 0.3, 0.8, 1.3, 29.625727574619024, 17.146924588701562),
    (-0.4, 0.15, 0.8, 1.3, 11.295886949650425, 23.072902240081046),
];

pub const SIGMA_W: [(f64, f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.0, 1.0, 1.0, 0.2998803353773439, 0.0),
    (0.25, 0.3, 1.0, 1.0, 0.25014579530398173, 0.30042255352211117),
    (-0.4, 0.15, 1.0, 1.0, -0.40015538437326087, 0.14931681668208233),
    (0.3, 0.0, 0.8, 1.3, 0.29979318344861916, 0.0),
    (0.25, 0.3, 0.8, 1.3, 0.25021951615400534, 0.30071882273903544),
    (-0.4, 0.15, 0.8, 1.3, -0.40030499577853373, 0.14881383269573953),
];

pub const INVARIANTS: [(f64, f64, f64, f64, f64, f64); 3] = [
    (1.0, 1.0, 11.817045008077116, 2.3314079772079876e-53, -4.024173611641974e-53, 4.0072165386709917e-53),
    (1.0, 2.0, 8.124218443053017, -2.1024345248621256e-54, 4.44305204494595, -3.4586519563025574e-54),
    (0.8, 1.3, 19.992991623620846, 1.3076681897463345e-53, 16.66350499987165, 3.363949018030943e-53),
];
