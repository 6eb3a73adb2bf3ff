// Generated by tools/gen_oracles.py — high-precision reference values
// (mpmath, 50 significant digits), frozen.  Do not edit by hand.

pub const AGM_ONE_SQRT2: f64 = 1.1981402347355923;

pub const ELLINT: [(f64, f64, f64); 5] = [
    (0.1, 1.574745561517356, 1.5668619420216683),
    (0.5, 1.685750354812596, 1.4674622093394272),
    (0.9, 2.2805491384227703, 1.1716970527816142),
    (0.99, 3.3566005233611924, 1.028475809028804),
    (0.999, 4.495596395842144, 1.0039944099655078),
];

pub const WAVE_PARAMS: [(f64, f64, f64, f64, f64, f64, f64, f64, f64); 50] = [
    (0.7337481918511972, 1.8880385021797568, 1.3310576065446498, 1.8228512821746854, 0.048164902357803935, 0.949056819188389, 3.310226100347089, 3.19593582670027, 6.620452200694178),
    (0.7518128047333916, 1.9136672914585575, 1.3170367212403618, 1.8024399609898474, 0.051871016133982886, 0.9416978291357658, 3.33609418689322, 3.1421916980663895, 6.67218837378644),
    (0.26628758333965574, 1.5998107716785208, 1.542568790600907, 2.740922223419963, 0.004596662566989455, 0.999493330168128, 3.1431852107120473, 5.3851532624239775, 6.2863704214240945),
    (0.8920044382293338, 2.2474830120723133, 1.1813986270393975, 1.661812316329717, 0.09798642940565089, 0.8321962431753493, 3.7750622877155173, 2.7913203218621856, 7.550124575431035),
    (0.8396168538922273, 2.0827343138158585, 1.23871126447166, 1.7110019441208364, 0.07570794102651801, 0.8878145655059629, 3.5385684980279737, 2.906994684520241, 7.077136996055947),
    (0.5199730519224748, 1.696956333402967, 1.4585241544773924, 2.121518456863899, 0.019691093256102753, 0.990837860481059, 3.1706425227478965, 3.963906730963509, 6.341285045495793),
    (0.8087046856304213, 2.0126274209269974, 1.268434049934795, 1.741817680115003, 0.06594892984642428, 0.910984859515623, 3.448567361767351, 2.984544252620417, 6.897134723534702),
    (0.5579433911319881, 1.7205586469157625, 1.4402907365991704, 2.059034849776754, 0.02329256202451246, 0.9872581819713525, 3.1821388882457025, 3.808143872034224, 6.364277776491405),
    (0.7656481523431046, 1.934948468319135, 1.3058648644511026, 1.7872007552146236, 0.054929283337122305, 0.9353719660193465, 3.3586559868363803, 3.102197611182106, 6.717311973672761),
    (0.38360770749132544, 1.633918636587446, 1.5113078524094736, 2.3978640001955123, 0.009947269467480827, 0.9976347178721094, 3.149041024043959, 4.621388077477686, 6.298082048087918),
    (0.1285539722721754, 1.5773471504331307, 1.56428628383533, 3.4478604488994438, 0.0010415112165548664, 0.9999739672489287, 3.1416744400184373, 6.86726130140943, 6.283348880036875),
    (0.7329115024540888, 1.8869056844239254, 1.3316920825236231, 1.823811189856267, 0.04800050047668491, 0.9493749749634559, 3.3091167730755933, 3.198466276876411, 6.6182335461511865),
    (0.5180273944479931, 1.695829990100916, 1.4594142179061138, 2.1248597960445044, 0.0195185990506714, 0.9909952590118306, 3.170138933583222, 3.972155703795245, 6.340277867166444),
    (0.7182231806162912, 1.8677362885812159, 1.3426235450783262, 1.8408787738914847, 0.04521088294571096, 0.9546600316654198, 3.2907972989182697, 3.243476573108652, 6.581594597836539),
    (0.4119248632064388, 1.6446526916751616, 1.5018768593712157, 2.332267209642902, 0.011619572433427297, 0.9967772632010331, 3.1517499140188425, 4.4694682437627, 6.303499828037685),
    (0.9004501630552806, 2.2824978711364996, 1.1711419389750422, 1.6542138807758862, 0.10260866778158677, 0.8205211027769789, 3.8287773988473415, 2.7748620490150264, 7.657554797694683),
    (0.4166824301220866, 1.6465645148337873, 1.500216888556011, 2.3217378842407537, 0.011916849700842301, 0.9966112053340141, 3.1522750665209394, 4.444864672811195, 6.304550133041879),
    (0.6157351850519718, 1.7633167963266563, 1.409197327994095, 1.9727783218259791, 0.029754427944172678, 0.9794845735798035, 3.207393703106476, 3.588394768444907, 6.414787406212952),
    (0.16146980022986035, 1.5811879040793528, 1.5605070772047323, 3.2243336073013404, 0.0016511446053776638, 0.9999345765393969, 3.1417982009006127, 6.406705680196213, 6.283596401801225),
    (0.32919070086688357, 1.6161587469526482, 1.5273346960837746, 2.540348317065763, 0.007168266673442643, 0.9987693432744995, 3.1454636395726507, 4.944175984102166, 6.2909272791453015),
    (0.3984642033838077, 1.6394148415585086, 1.5064552023271607, 2.3628051255227764, 0.010804230495003122, 0.9972116211980244, 3.1503770983089474, 4.54047808188535, 6.300754196617895),
    (0.8416755774800567, 2.0879612220129626, 1.2366353502210443, 1.7089987914109404, 0.07642866969198578, 0.8860608499420584, 3.5455721283648063, 2.9020550852922646, 7.091144256729613),
    (0.9896964282428448, 3.3420067967663276, 1.029187451760901, 1.5789412248707884, 0.22667115767046894, 0.5584655917903706, 5.625400561417296, 2.657737519094006, 11.250801122834591),
    (0.7343961552904222, 1.888918949453622, 1.3305653555562758, 1.8221087919121515, 0.04829264401412832, 0.9488091084098381, 3.311090319163317, 3.1939786421793332, 6.622180638326634),
    (0.6170892192871293, 1.764433270235361, 1.4084173749190505, 1.9708714591175598, 0.029922095332737614, 0.9792607559604161, 3.2081267777433364, 3.583476694837949, 6.416253555486673),
    (0.8181772455140692, 2.0325906146556827, 1.2596018486205525, 1.732224715884008, 0.06874549469117558, 0.9044689282266433, 3.473411363892169, 2.9601283060069723, 6.946822727784338),
    (0.14862381849525585, 1.5795801335350264, 1.5620857200951719, 3.3054398163409107, 0.0013960373377981418, 0.9999532296056459, 3.141739593989562, 6.574425017176595, 6.283479187979124),
    (0.8456789569942103, 2.098356623557553, 1.2325615093770521, 1.7051205144058152, 0.07785928772364681, 0.8825658210070436, 3.559612868312879, 2.892534499122876, 7.119225736625758),
    (0.23706418797467477, 1.5935919104232386, 1.548488688802112, 2.8521354677372464, 0.003614961695052662, 0.9996865351376618, 3.142577741288853, 5.6244370829361605, 6.285155482577706),
    (0.68347453483244, 1.8271912764327365, 1.3670069748801212, 1.8829649003050561, 0.03926242282602514, 0.9651618777431933, 3.2549904073456335, 3.354346513643236, 6.509980814691267),
    (0.13722799144543968, 1.5782708219923327, 1.5633748870130801, 3.3836863435215108, 0.0011881910578008259, 0.9999661187854841, 3.1416990981708826, 6.735551456571441, 6.283398196341765),
    (0.23444987797704492, 1.5930757089251781, 1.548983217912243, 2.862785379935631, 0.0035333888016711385, 0.9997005153465522, 3.142533794234107, 5.647189114544198, 6.285067588468214),
    (0.4403399463594535, 1.656560763510869, 1.491633241558423, 2.271295283621699, 0.013468402390344497, 0.9956781733613635, 3.1552290063604804, 4.326105578949334, 6.310458012720961),
    (0.2583853622582188, 1.5980467962922846, 1.5442408864249548, 2.7696647083517547, 0.004318398009939525, 0.9995527722717713, 3.1429982895746664, 5.447306963251605, 6.285996579149333),
    (0.5706252856197507, 1.7291812880703727, 1.4338238126598257, 2.039247264118752, 0.024602101719792838, 0.9858202299465149, 3.186780467834626, 3.758214014466227, 6.373560935669252),
    (0.23941725516059986, 1.5940620811881248, 1.5480386789182685, 2.842655475340582, 0.0036892490711213, 0.9996735265399221, 3.142618635169322, 5.60416195554503, 6.285237270338644),
    (0.708107000159357, 1.855275788604049, 1.3499309180279726, 1.8528772810371195, 0.043389786888993, 0.9579900224757033, 3.279358427419812, 3.2751188604232753, 6.558716854839624),
    (0.09715990159539147, 1.574523239148301, 1.5670826416736494, 3.724137506712048, 0.0005928051054978277, 0.9999915660906002, 3.1416191497210706, 7.43070754142046, 6.283238299442141),
    (0.3198937623771007, 1.6134736051737215, 1.5298047398847234, 2.5672502635396492, 0.006746778689079615, 0.998909553258899, 3.145022132725114, 5.004146874907972, 6.290044265450228),
    (0.3994983130309128, 1.639808408007882, 1.5061096304063442, 2.3604187946842234, 0.010865539664853858, 0.9971800366506264, 3.1504768829327126, 4.534947381887553, 6.300953765865425),
    (0.9181425440289702, 2.3679371877954183, 1.148501903458043, 1.6385771162109373, 0.11372919638388196, 0.7926175028737149, 3.963567095351328, 2.7427291460614756, 7.927134190702656),
    (0.2159273522126267, 1.5896020872594936, 1.552323626232139, 2.942030047676923, 0.0029841246568031127, 0.999786357048214, 3.142263976140947, 5.815691303901951, 6.284527952281894),
    (0.9102685479846369, 2.3276174569161574, 1.1587834874152803, 1.6454899907080198, 0.10850890322159337, 0.8056690745039586, 3.899358623792326, 2.7566194636348245, 7.798717247584652),
    (0.4996544084220309, 1.6855632494562578, 1.4676130217388117, 2.157135123592456, 0.017943641390855795, 0.9923719281467347, 3.1657411545858127, 4.051424020405121, 6.3314823091716255),
    (0.1679756321484812, 1.5820560328847915, 1.5596566828782217, 3.1857680763072356, 0.0017888379305506337, 0.9999232113640621, 3.1418339107301416, 6.326674887495903, 6.283667821460283),
    (0.9049296339672304, 2.302440594482533, 1.1655641754278205, 1.650219296292538, 0.10522425027506145, 0.8139271287523593, 3.8597959726510553, 2.7664165620970236, 7.719591945302111),
    (0.5145378186203137, 1.6938289990779416, 1.4610000114251307, 2.1308885638675097, 0.019212014965917408, 0.9912717988960889, 3.1692545446045863, 3.9870189191230696, 6.338509089209173),
    (0.7489482624277595, 1.9094476089361239, 1.3193019226882843, 1.8056372175288329, 0.05126256166441511, 0.9429298489377193, 3.3317352898829444, 3.1505997913808734, 6.663470579765889),
    (0.893864492020298, 2.254925132310963, 1.1791678439616087, 1.6601312912833392, 0.09897205830979006, 0.8297054327779311, 3.786395182530562, 2.7876371741182155, 7.572790365061124),
    (0.5911457551618206, 1.7440036806208248, 1.4229423103431365, 2.0082815015116102, 0.026845574402826405, 0.9831923969066704, 3.1952979533547077, 3.6794978375595195, 6.390595906709415),
];

pub const DK_CENTRAL_DIFF: [(f64, f64, f64, f64, f64, f64); 4] = [
    (0.5, 0.08322575131215318, -0.0699588700840591, 0.2231849222429721, 0.5417318486132803, -1.7918056418494632),
    (0.9, 0.5679275034633722, -1.433316613031372, 6.677720428713895, 4.318086061294081, -0.895032792034856),
    (0.95, 1.1248929694693997, -2.598390607164794, 15.512364492390969, 9.178899360258027, -0.8371990421279554),
    (0.99, 5.073167143738524, -8.274148865221523, 84.09188061019488, 48.81373831855826, -0.7953197713393751),
];

pub const KAPPA_SQ_SLOPE_95: f64 = -3.769837134455522;

pub const NOME_SLOPE_95: f64 = 1.1248929694693997;
