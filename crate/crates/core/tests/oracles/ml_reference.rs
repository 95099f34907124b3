// (alpha, beta, z, E_{alpha,beta}(z)) from tests/oracles/ml_reference.py
pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.1, 1.0, -1000.0, 9.3492055360589073502e-4),
    (0.1, 1.0, -200.0, 0.0046575160590471970551),
    (0.1, 1.0, -50.0, 0.01837805701221919541),
    (0.1, 1.0, -20.0, 0.04473386400745095983),
    (0.1, 1.0, -10.0, 0.085696957010654685096),
    (0.1, 1.0, -5.0, 0.15804238235845182791),
    (0.1, 1.0, -2.0, 0.32001533595972739861),
    (0.1, 1.0, -1.0, 0.48556446431108210159),
    (0.1, 1.0, -0.3, 0.7596125317784889446),
    (0.1, 1.0, 0.4, 1.7139664273547265491),
    (0.1, 1.0, 1.0, 23.160534598113205163),
    (0.1, 0.5, -1000.0, 4.5049014416161747139e-4),
    (0.1, 0.5, -200.0, 0.0022457913395738629233),
    (0.1, 0.5, -50.0, 0.0088845006695190182722),
    (0.1, 0.5, -20.0, 0.021732100564682654516),
    (0.1, 0.5, -10.0, 0.041947084375351055663),
    (0.1, 0.5, -5.0, 0.078372615301626088569),
    (0.1, 0.5, -2.0, 0.16318500422722145662),
    (0.1, 0.5, -1.0, 0.25434503234937213449),
    (0.1, 0.5, -0.3, 0.41461522803123174229),
    (0.1, 0.5, 0.4, 1.0525318026450969039),
    (0.1, 0.5, 1.0, 26.961328078107140819),
    (0.1, 0.8, -1000.0, 7.6971224263321736557e-4),
    (0.1, 0.8, -200.0, 0.0038351985379958043648),
    (0.1, 0.8, -50.0, 0.015143504129017517249),
    (0.1, 0.8, -20.0, 0.036908203947596002494),
    (0.1, 0.8, -10.0, 0.070845511161408274869),
    (0.1, 0.8, -5.0, 0.13110297362159931316),
    (0.1, 0.8, -2.0, 0.26744092123783152583),
    (0.1, 0.8, -1.0, 0.40872276262287681013),
    (0.1, 0.8, -0.3, 0.6465685308108696693),
    (0.1, 0.8, 0.4, 1.5074831359665729289),
    (0.1, 0.8, 1.0, 24.955250338250744932),
    (0.1, 2.0, -1000.0, 0.0010386815625029634052),
    (0.1, 2.0, -200.0, 0.0051720657623374165933),
    (0.1, 2.0, -50.0, 0.020374243028672272498),
    (0.1, 2.0, -20.0, 0.049434437952619442634),
    (0.1, 2.0, -10.0, 0.094237588828458266904),
    (0.1, 2.0, -5.0, 0.1723185507988490773),
    (0.1, 2.0, -2.0, 0.34257035018774019099),
    (0.1, 2.0, -1.0, 0.5105935387916558991),
    (0.1, 2.0, -0.3, 0.77696054336945158075),
    (0.1, 2.0, 0.4, 1.6151578820171747389),
    (0.1, 2.0, 1.0, 12.317443229341990852),
    (0.1, 3.0, -1000.0, 5.4664318071866901843e-4),
    (0.1, 3.0, -200.0, 0.0027213634771242194966),
    (0.1, 3.0, -50.0, 0.010711256230982062128),
    (0.1, 3.0, -20.0, 0.025947514763377661798),
    (0.1, 3.0, -10.0, 0.049343288773133167878),
    (0.1, 3.0, -5.0, 0.089846563793574556344),
    (0.1, 3.0, -2.0, 0.17700761588498978235),
    (0.1, 3.0, -1.0, 0.26153959565186614682),
    (0.1, 3.0, -0.3, 0.39269677945694773217),
    (0.1, 3.0, 0.4, 0.78525180436534281711),
    (0.1, 3.0, 1.0, 4.5492666035127598639),
    (0.3, 1.0, -1000.0, 7.6993246495257769278e-4),
    (0.3, 1.0, -200.0, 0.003840658560053858052),
    (0.3, 1.0, -50.0, 0.015228201501814695234),
    (0.3, 1.0, -20.0, 0.037406226213884453058),
    (0.3, 1.0, -10.0, 0.072649729072772086177),
    (0.3, 1.0, -5.0, 0.13708086902027063889),
    (0.3, 1.0, -2.0, 0.29023222616787535504),
    (0.3, 1.0, -1.0, 0.45659440832969067062),
    (0.3, 1.0, -0.3, 0.74425667319976158834),
    (0.3, 1.0, 0.4, 1.7257423014148418549),
    (0.3, 1.0, 1.0, 8.0406755969670582905),
    (0.3, 1.0, 3.0, 2.7203610806251024679e+17),
    (0.3, 0.5, -1000.0, 2.1791819371576021156e-4),
    (0.3, 0.5, -200.0, 0.0010914304388516649146),
    (0.3, 0.5, -50.0, 0.0043918174370267184428),
    (0.3, 0.5, -20.0, 0.011093071721269412932),
    (0.3, 0.5, -10.0, 0.022472804921101307345),
    (0.3, 0.5, -5.0, 0.045519369411852957386),
    (0.3, 0.5, -2.0, 0.1110854803064770455),
    (0.3, 0.5, -1.0, 0.19751221034659768747),
    (0.3, 0.5, -0.3, 0.37766571303500302503),
    (0.3, 0.5, 0.4, 1.1916595844427619187),
    (0.3, 0.5, 1.0, 9.1504570968062542715),
    (0.3, 0.5, 3.0, 1.6975737230004818082e+18),
    (0.3, 0.8, -1000.0, 5.6397166535404058817e-4),
    (0.3, 0.8, -200.0, 0.002815490765544523416),
    (0.3, 0.8, -50.0, 0.011195955322214592575),
    (0.3, 0.8, -20.0, 0.027654825591324346622),
    (0.3, 0.8, -10.0, 0.054171677862665503517),
    (0.3, 0.8, -5.0, 0.10373404282718067601),
    (0.3, 0.8, -2.0, 0.2265520516206396403),
    (0.3, 0.8, -1.0, 0.36667737320115862753),
    (0.3, 0.8, -0.3, 0.62174623504251093523),
    (0.3, 0.8, 0.4, 1.568675002237514047),
    (0.3, 0.8, 1.0, 8.5862675132584978503),
    (0.3, 0.8, 3.0, 5.6585790766682715418e+17),
    (0.3, 2.0, -1000.0, 0.0010994213953043127466),
    (0.3, 2.0, -200.0, 0.0054746913722184865442),
    (0.3, 2.0, -50.0, 0.021568397368757572967),
    (0.3, 2.0, -20.0, 0.052335915643271980184),
    (0.3, 2.0, -10.0, 0.099754796044481872019),
    (0.3, 2.0, -5.0, 0.18222783247195027923),
    (0.3, 2.0, -2.0, 0.36037664355404642634),
    (0.3, 2.0, -1.0, 0.53236426762590699952),
    (0.3, 2.0, -0.3, 0.7937842940460815934),
    (0.3, 2.0, 0.4, 1.5046276147209501591),
    (0.3, 2.0, 1.0, 4.4485855844123591575),
    (0.3, 2.0, 3.0, 6.985900094652186547e+15),
    (0.3, 3.0, -1000.0, 6.4657673807233220366e-4),
    (0.3, 3.0, -200.0, 0.0032168968334237074167),
    (0.3, 3.0, -50.0, 0.012633075638091698822),
    (0.3, 3.0, -20.0, 0.030469506554827815337),
    (0.3, 3.0, -10.0, 0.057546144380746461404),
    (0.3, 3.0, -5.0, 0.10350299928333032332),
    (0.3, 3.0, -2.0, 0.19829478205635806947),
    (0.3, 3.0, -1.0, 0.2847298844079590578),
    (0.3, 3.0, -0.3, 0.40819065688345340771),
    (0.3, 3.0, 0.4, 0.70867319520148044871),
    (0.3, 3.0, 1.0, 1.693350508836593006),
    (0.3, 3.0, 3.0, 1.7939824415237961682e+14),
    (0.5, 1.0, -1000.0, 5.641893014533876542e-4),
    (0.5, 1.0, -200.0, 0.0028209126572120463987),
    (0.5, 1.0, -50.0, 0.0112815362653237725),
    (0.5, 1.0, -20.0, 0.028174348741051319319),
    (0.5, 1.0, -10.0, 0.056140992743822585858),
    (0.5, 1.0, -5.0, 0.11070463773306862637),
    (0.5, 1.0, -2.0, 0.25539567631050574387),
    (0.5, 1.0, -1.0, 0.42758357615580700441),
    (0.5, 1.0, -0.3, 0.73459933456765514992),
    (0.5, 1.0, 0.4, 1.6762339566888590015),
    (0.5, 1.0, 1.0, 5.0089800807622834663),
    (0.5, 1.0, 3.0, 1.6205988853999586625e+4),
    (0.5, 1.0, 7.0, 3.8146931449901993811e+21),
    (0.5, 1.0, 15.0, 1.0406110275769709185e+98),
    (0.5, 0.5, -1000.0, 2.8209436863274833442e-7),
    (0.5, 0.5, -200.0, 7.0521053470072111575e-6),
    (0.5, 0.5, -50.0, 1.1277028156766193889e-4),
    (0.5, 0.5, -20.0, 7.026087267299005751e-4),
    (0.5, 0.5, -10.0, 0.0027796561095304283729),
    (0.5, 0.5, -5.0, 0.010666394882413155097),
    (0.5, 0.5, -2.0, 0.053398230926744799218),
    (0.5, 0.5, -1.0, 0.13660600739194928254),
    (0.5, 0.5, -0.3, 0.34380978317745975013),
    (0.5, 0.5, 0.4, 1.2346831662232999248),
    (0.5, 0.5, 1.0, 5.5731696643100397533),
    (0.5, 0.5, 3.0, 4.8618530751582307633e+4),
    (0.5, 0.5, 7.0, 2.6702852014931395667e+22),
    (0.5, 0.5, 15.0, 1.5609165413654563777e+99),
    (0.5, 0.8, -1000.0, 3.344443057713620969e-4),
    (0.5, 0.8, -200.0, 0.0016756290714607526783),
    (0.5, 0.8, -50.0, 0.0067522664027519266692),
    (0.5, 0.8, -20.0, 0.017112699372846411181),
    (0.5, 0.8, -10.0, 0.03489485770642579341),
    (0.5, 0.8, -5.0, 0.071665381868248771003),
    (0.5, 0.8, -2.0, 0.17992819499000509045),
    (0.5, 0.8, -1.0, 0.32315429689982938721),
    (0.5, 0.8, -0.3, 0.60221251160576034578),
    (0.5, 0.8, 0.4, 1.551465120733483059),
    (0.5, 0.8, 1.0, 5.3012751362993784929),
    (0.5, 0.8, 3.0, 2.5149382827027409283e+4),
    (0.5, 0.8, 7.0, 8.3080447079045743679e+21),
    (0.5, 0.8, 15.0, 3.0741491002023066383e+98),
    (0.5, 2.0, -1000.0, 0.0011273797312848140273),
    (0.5, 2.0, -200.0, 0.0056169663582939931706),
    (0.5, 2.0, -50.0, 0.022172095956416380987),
    (0.5, 2.0, -20.0, 0.053989394226628256993),
    (0.5, 2.0, -10.0, 0.10339932663698948325),
    (0.5, 2.0, -5.0, 0.19010401892842525983),
    (0.5, 2.0, -2.0, 0.37803850262538272291),
    (0.5, 2.0, -1.0, 0.55596274325131957831),
    (0.5, 2.0, -0.3, 0.81236760773676572192),
    (0.5, 2.0, 0.4, 1.4055143115665870122),
    (0.5, 2.0, 1.0, 2.8806009136667708924),
    (0.5, 2.0, 3.0, 1800.1781907220333431),
    (0.5, 2.0, 7.0, 7.7850880510004069001e+19),
    (0.5, 2.0, 15.0, 4.6249379003420929709e+95),
    (0.5, 3.0, -1000.0, 7.5125390544340633408e-4),
    (0.5, 3.0, -200.0, 0.0037364043144773325961),
    (0.5, 3.0, -50.0, 0.014653924399656067538),
    (0.5, 3.0, -20.0, 0.035247612388750323106),
    (0.5, 3.0, -10.0, 0.066259271072737399759),
    (0.5, 3.0, -5.0, 0.11805471636987202025),
    (0.5, 3.0, -2.0, 0.22063601468818320536),
    (0.5, 3.0, -1.0, 0.30821552131499462757),
    (0.5, 3.0, -0.3, 0.42270490173186923512),
    (0.5, 3.0, 0.4, 0.65383250213198102635),
    (0.5, 3.0, 1.0, 1.1283481356030958431),
    (0.5, 3.0, 3.0, 199.65793693198247977),
    (0.5, 3.0, 7.0, 1.5887934797960014081e+18),
    (0.5, 3.0, 15.0, 2.055527955707596876e+93),
    (0.6, 1.0, -1000.0, 4.5099581196230699578e-4),
    (0.6, 1.0, -200.0, 0.0022583936635707114561),
    (0.6, 1.0, -50.0, 0.0090837447731034546371),
    (0.6, 1.0, -20.0, 0.022946564273258376396),
    (0.6, 1.0, -10.0, 0.046589654426804280962),
    (0.6, 1.0, -5.0, 0.095117846438754620348),
    (0.6, 1.0, -2.0, 0.23557103111182496885),
    (0.6, 1.0, -1.0, 0.41332734094310630052),
    (0.6, 1.0, -0.3, 0.73218725509710487522),
    (0.6, 1.0, 0.4, 1.6417206437900170661),
    (0.6, 1.0, 1.0, 4.2486350026483744806),
    (0.6, 1.0, 3.0, 854.85061126481046321),
    (0.6, 1.0, 7.0, 2.2200496732951056888e+11),
    (0.6, 1.0, 15.0, 6.9799163369995234247e+39),
    (0.6, 0.5, -1000.0, -9.334358089585356638e-5),
    (0.6, 0.5, -200.0, -4.6200214676257154766e-4),
    (0.6, 0.5, -50.0, -0.0017755896573756840299),
    (0.6, 0.5, -20.0, -0.0040578211013590392113),
    (0.6, 0.5, -10.0, -0.0067461752596603755711),
    (0.6, 0.5, -5.0, -0.0075581033257670454487),
    (0.6, 0.5, -2.0, 0.021032150876248342034),
    (0.6, 0.5, -1.0, 0.10379921659769773857),
    (0.6, 0.5, -0.3, 0.32855161694869655548),
    (0.6, 0.5, 0.4, 1.2334051617680965504),
    (0.6, 0.5, 1.0, 4.6739846535764259795),
    (0.6, 0.5, 3.0, 2135.8269623624551916),
    (0.6, 0.5, 7.0, 1.1235982613761185623e+12),
    (0.6, 0.5, 15.0, 6.6669356963468502388e+40),
    (0.6, 0.8, -1000.0, 2.18093485767400299e-4),
    (0.6, 0.8, -200.0, 0.0010958391988849544845),
    (0.6, 0.8, -50.0, 0.0044638678420942175755),
    (0.6, 0.8, -20.0, 0.011559918594536392485),
    (0.6, 0.8, -10.0, 0.024421858655757058548),
    (0.6, 0.8, -5.0, 0.053557183697462320465),
    (0.6, 0.8, -2.0, 0.15356912362263041245),
    (0.6, 0.8, -1.0, 0.30076098217613424485),
    (0.6, 0.8, -0.3, 0.5948205304743465298),
    (0.6, 0.8, 0.4, 1.5277556537105689702),
    (0.6, 0.8, 1.0, 4.4764724432298282389),
    (0.6, 0.8, 3.0, 1233.0472915922361323),
    (0.6, 0.8, 7.0, 4.246802247350762231e+11),
    (0.6, 0.8, 15.0, 1.7213953948124728387e+40),
    (0.6, 2.0, -1000.0, 0.0011262017790602887611),
    (0.6, 2.0, -200.0, 0.0056138564604294937425),
    (0.6, 2.0, -50.0, 0.022199420699167523912),
    (0.6, 2.0, -20.0, 0.054234582147726055295),
    (0.6, 2.0, -10.0, 0.10436089819291366172),
    (0.6, 2.0, -5.0, 0.1931969061761173251),
    (0.6, 2.0, -2.0, 0.38718827509250455894),
    (0.6, 2.0, -1.0, 0.56888446093749440691),
    (0.6, 2.0, -0.3, 0.82224067383874802193),
    (0.6, 2.0, 0.4, 1.3624652205718147332),
    (0.6, 2.0, 1.0, 2.4904749260191330785),
    (0.6, 2.0, 3.0, 136.53413034211704242),
    (0.6, 2.0, 7.0, 8.6669433617617931142e+9),
    (0.6, 2.0, 15.0, 7.6506461991665459499e+37),
    (0.6, 3.0, -1000.0, 8.0397063002604812467e-4),
    (0.6, 3.0, -200.0, 0.0039985100032513091275),
    (0.6, 3.0, -50.0, 0.015680001319470817858),
    (0.6, 3.0, -20.0, 0.037699930477368810782),
    (0.6, 3.0, -10.0, 0.070789869582398180011),
    (0.6, 3.0, -5.0, 0.12571915144860825611),
    (0.6, 3.0, -2.0, 0.23232493875126739892),
    (0.6, 3.0, -1.0, 0.32009367081650799337),
    (0.6, 3.0, -0.3, 0.42954281495586843767),
    (0.6, 3.0, 0.4, 0.63250120854109517563),
    (0.6, 3.0, 1.0, 0.98904019662227603189),
    (0.6, 3.0, 3.0, 21.519896402477501246),
    (0.6, 3.0, 7.0, 3.3835237162246245307e+8),
    (0.6, 3.0, 15.0, 8.385829347917800459e+35),
    (0.7, 1.0, -1000.0, 3.3454145717409959777e-4),
    (0.7, 1.0, -200.0, 0.0016780914801320824475),
    (0.7, 1.0, -50.0, 0.0067936656703830938718),
    (0.7, 1.0, -20.0, 0.01739569829160397999),
    (0.7, 1.0, -10.0, 0.036173265542309158149),
    (0.7, 1.0, -5.0, 0.077569357764769809981),
    (0.7, 1.0, -2.0, 0.21378672701529727534),
    (0.7, 1.0, -1.0, 0.39961197811559939027),
    (0.7, 1.0, -0.3, 0.73154067570065076036),
    (0.7, 1.0, 0.4, 1.6046262434118160433),
    (0.7, 1.0, 1.0, 3.7041461454375862416),
    (0.7, 1.0, 3.0, 174.19304297541545683),
    (0.7, 1.0, 7.0, 1.4269386675426955503e+7),
    (0.7, 1.0, 15.0, 8.8671406614325479137e+20),
    (0.7, 1.0, 50.0, 1.8570777869158280012e+116),
    (0.7, 0.5, -1000.0, -1.7169236803212244643e-4),
    (0.7, 0.5, -200.0, -8.5651743022409179408e-4),
    (0.7, 0.5, -50.0, -0.0033943345213484370736),
    (0.7, 0.5, -20.0, -0.0082945194431597074199),
    (0.7, 0.5, -10.0, -0.015736128789346789579),
    (0.7, 0.5, -5.0, -0.026375845632765751098),
    (0.7, 0.5, -2.0, -0.014883236157535449374),
    (0.7, 0.5, -1.0, 0.069138974339373653112),
    (0.7, 0.5, -0.3, 0.31480032993380281606),
    (0.7, 0.5, 0.4, 1.2225210406257749659),
    (0.7, 0.5, 1.0, 4.0288398776977743533),
    (0.7, 0.5, 3.0, 382.04464540075566782),
    (0.7, 0.5, 7.0, 5.728577137114624544e+7),
    (0.7, 0.5, 15.0, 6.1354833638251718703e+21),
    (0.7, 0.5, 50.0, 3.0365476350504178866e+117),
    (0.7, 0.8, -1000.0, 1.053844955790591431e-4),
    (0.7, 0.8, -200.0, 5.3236841881955803447e-4),
    (0.7, 0.8, -50.0, 0.0022128717792627471318),
    (0.7, 0.8, -20.0, 0.0059690926073779352548),
    (0.7, 0.8, -10.0, 0.013502942161682761428),
    (0.7, 0.8, -5.0, 0.033750497465661173453),
    (0.7, 0.8, -2.0, 0.12449210162353083694),
    (0.7, 0.8, -1.0, 0.27814718216445881522),
    (0.7, 0.8, -0.3, 0.58926451037334786268),
    (0.7, 0.8, 0.4, 1.4987684810524138697),
    (0.7, 0.8, 1.0, 3.8852628833011935048),
    (0.7, 0.8, 3.0, 238.52898804990842047),
    (0.7, 0.8, 7.0, 2.4880659666401541932e+7),
    (0.7, 0.8, 15.0, 1.9222491248173857351e+21),
    (0.7, 0.8, 50.0, 5.6787153062377822797e+116),
    (0.7, 2.0, -1000.0, 0.0011135709101716711928),
    (0.7, 2.0, -200.0, 0.0055544133314332513755),
    (0.7, 2.0, -50.0, 0.022015528822881944964),
    (0.7, 2.0, -20.0, 0.054022893620845817243),
    (0.7, 2.0, -10.0, 0.10463763325108232624),
    (0.7, 2.0, -5.0, 0.19566393372518326075),
    (0.7, 2.0, -2.0, 0.39683827965104412231),
    (0.7, 2.0, -1.0, 0.58280466905639584944),
    (0.7, 2.0, -0.3, 0.83242327082022613415),
    (0.7, 2.0, 0.4, 1.3236742271408067825),
    (0.7, 2.0, 1.0, 2.2129227019446794205),
    (0.7, 2.0, 3.0, 35.836575527383954739),
    (0.7, 2.0, 7.0, 8.8536491745736577196e+5),
    (0.7, 2.0, 15.0, 1.8520522198862522891e+19),
    (0.7, 2.0, 50.0, 6.9459249917269944391e+113),
    (0.7, 3.0, -1000.0, 8.5599138256600654173e-4),
    (0.7, 3.0, -200.0, 0.0042576855712603703493),
    (0.7, 3.0, -50.0, 0.016701972919710475539),
    (0.7, 3.0, -20.0, 0.040173063460474493237),
    (0.7, 3.0, -10.0, 0.07543021304525889864),
    (0.7, 3.0, -5.0, 0.13369496948950407901),
    (0.7, 3.0, -2.0, 0.24443729130688328402),
    (0.7, 3.0, -1.0, 0.33204738302795587505),
    (0.7, 3.0, -0.3, 0.43606811419771100843),
    (0.7, 3.0, 0.4, 0.61432362871105803132),
    (0.7, 3.0, 1.0, 0.89065127394389467979),
    (0.7, 3.0, 3.0, 7.1051544822334529433),
    (0.7, 3.0, 7.0, 5.4933631344608986788e+4),
    (0.7, 3.0, 15.0, 3.8683241375709033033e+17),
    (0.7, 3.0, 50.0, 2.5979457796877083995e+111),
    (0.8, 1.0, -1000.0, 2.180957552274838146e-4),
    (0.8, 1.0, -200.0, 0.0010959340727899075648),
    (0.8, 1.0, -50.0, 0.0044677761579029922645),
    (0.8, 1.0, -20.0, 0.011617250451432777958),
    (0.8, 1.0, -10.0, 0.024902819761976532186),
    (0.8, 1.0, -5.0, 0.057595384762152244264),
    (0.8, 1.0, -2.0, 0.18979669236370564843),
    (0.8, 1.0, -1.0, 0.38694857861897684617),
    (0.8, 1.0, -0.3, 0.73274640256857662948),
    (0.8, 1.0, 0.4, 1.5666339217882536694),
    (0.8, 1.0, 1.0, 3.2945692348790183961),
    (0.8, 1.0, 3.0, 64.751787985702501649),
    (0.8, 1.0, 7.0, 1.1010384471839216081e+5),
    (0.8, 1.0, 15.0, 8.2644857106244116402e+12),
    (0.8, 1.0, 50.0, 6.9115275310198968171e+57),
    (0.8, 0.5, -1000.0, -2.3121770999711152448e-4),
    (0.8, 0.5, -200.0, -0.0011581250162428030074),
    (0.8, 0.5, -50.0, -0.0046618510769924456434),
    (0.8, 0.5, -20.0, -0.011782589271326562554),
    (0.8, 0.5, -10.0, -0.023807341482831589364),
    (0.8, 0.5, -5.0, -0.045884999529087700036),
    (0.8, 0.5, -2.0, -0.055643228135738000241),
    (0.8, 0.5, -1.0, 0.032700864517895546967),
    (0.8, 0.5, -0.3, 0.30289444008633402689),
    (0.8, 0.5, 0.4, 1.2049412892677752264),
    (0.8, 0.5, 1.0, 3.5423959720535270522),
    (0.8, 0.5, 3.0, 128.83083568436225234),
    (0.8, 0.5, 7.0, 3.7152573313809076896e+5),
    (0.8, 0.5, 15.0, 4.4902742814091521541e+13),
    (0.8, 0.5, 50.0, 7.9694856875866855617e+58),
    (0.8, 0.8, -1000.0, 1.7469360255448723797e-7),
    (0.8, 0.8, -200.0, 4.4111651862077643741e-6),
    (0.8, 0.8, -50.0, 7.3315313829055338196e-5),
    (0.8, 0.8, -20.0, 4.9582520959208668872e-4),
    (0.8, 0.8, -10.0, 0.0022770080856945366407),
    (0.8, 0.8, -5.0, 0.011828729724994501911),
    (0.8, 0.8, -2.0, 0.092077465517931656239),
    (0.8, 0.8, -1.0, 0.25574384475824189218),
    (0.8, 0.8, -0.3, 0.58572441653844703673),
    (0.8, 0.8, 0.4, 1.466731684253227218),
    (0.8, 0.8, 1.0, 3.4400241808715758921),
    (0.8, 0.8, 3.0, 85.296850581086104302),
    (0.8, 0.8, 7.0, 1.7909237890056615612e+5),
    (0.8, 0.8, 15.0, 1.626442251682960699e+13),
    (0.8, 0.8, 50.0, 1.8378774254922717398e+58),
    (0.8, 2.0, -1000.0, 0.0010886733280510089038),
    (0.8, 2.0, -200.0, 0.00543431779623669099),
    (0.8, 2.0, -50.0, 0.021599977004151781125),
    (0.8, 2.0, -20.0, 0.053294314373069420786),
    (0.8, 2.0, -10.0, 0.10411641940370937752),
    (0.8, 2.0, -5.0, 0.19744210132577514452),
    (0.8, 2.0, -2.0, 0.4072949128000879214),
    (0.8, 2.0, -1.0, 0.59790131634080448615),
    (0.8, 2.0, -0.3, 0.84283372201476714505),
    (0.8, 2.0, 0.4, 1.2888330389414342434),
    (0.8, 2.0, 1.0, 2.0057628384340856395),
    (0.8, 2.0, 3.0, 16.008095132071139093),
    (0.8, 2.0, 7.0, 9669.9152876318501489),
    (0.8, 2.0, 15.0, 2.7996372241486772832e+11),
    (0.8, 2.0, 50.0, 5.198302362221039199e+55),
    (0.8, 3.0, -1000.0, 9.0647729539405378193e-4),
    (0.8, 3.0, -200.0, 0.0045099259541104431821),
    (0.8, 3.0, -50.0, 0.017706648989278623265),
    (0.8, 3.0, -20.0, 0.042647538847362564122),
    (0.8, 3.0, -10.0, 0.080177986149774057223),
    (0.8, 3.0, -5.0, 0.14204442109264875023),
    (0.8, 3.0, -2.0, 0.25703201233090656865),
    (0.8, 3.0, -1.0, 0.34404041745096001646),
    (0.8, 3.0, -0.3, 0.44225605279349965839),
    (0.8, 3.0, 0.4, 0.59877067130261271212),
    (0.8, 3.0, 1.0, 0.81784169299248710584),
    (0.8, 3.0, 3.0, 3.7064842366420461495),
    (0.8, 3.0, 7.0, 849.13834440057207756),
    (0.8, 3.0, 15.0, 9.4839157102209785414e+9),
    (0.8, 3.0, 50.0, 3.9097503884333503114e+53),
    (0.9, 1.0, -1000.0, 1.0528835943209589052e-4),
    (0.9, 1.0, -200.0, 5.2997543888320913649e-4),
    (0.9, 1.0, -50.0, 0.0021753530768569760498),
    (0.9, 1.0, -20.0, 0.0057495078161091125836),
    (0.9, 1.0, -10.0, 0.012820606051102099938),
    (0.9, 1.0, -5.0, 0.034431324804098418323),
    (0.9, 1.0, -2.0, 0.16352830001693004278),
    (0.9, 1.0, -1.0, 0.37606602142464187902),
    (0.9, 1.0, -0.3, 0.73584527664843058747),
    (0.9, 1.0, 0.4, 1.5288115651116379944),
    (0.9, 1.0, 1.0, 2.9749390749704473833),
    (0.9, 1.0, 3.0, 32.921897176850824779),
    (0.9, 1.0, 7.0, 6600.6233581023592283),
    (0.9, 1.0, 15.0, 7.0334760686090430605e+8),
    (0.9, 1.0, 50.0, 3.8292068545927228506e+33),
    (0.9, 0.5, -1000.0, -2.6890289260738454756e-4),
    (0.9, 0.5, -200.0, -0.0013505782894263856045),
    (0.9, 0.5, -50.0, -0.0054959541461279498022),
    (0.9, 0.5, -20.0, -0.014241829127028770965),
    (0.9, 0.5, -10.0, -0.030347874573228821712),
    (0.9, 0.5, -5.0, -0.066346276353700432664),
    (0.9, 0.5, -2.0, -0.10282482036797026215),
    (0.9, 0.5, -1.0, -0.0050172483148519469026),
    (0.9, 0.5, -0.3, 0.29316702779466012339),
    (0.9, 0.5, 0.4, 1.1827827337306462456),
    (0.9, 0.5, 1.0, 3.1616766001744877219),
    (0.9, 0.5, 3.0, 60.721506565421873872),
    (0.9, 0.5, 7.0, 1.9457427269185329326e+4),
    (0.9, 0.5, 15.0, 3.1663144792961022877e+9),
    (0.9, 0.5, 50.0, 3.3649688813280885586e+34),
    (0.9, 0.8, -1000.0, -9.3577691464596685578e-5),
    (0.9, 0.8, -200.0, -4.6786633076737874642e-4),
    (0.9, 0.8, -50.0, -0.0018699649236506152139),
    (0.9, 0.8, -20.0, -0.0046493076542023829553),
    (0.9, 0.8, -10.0, -0.0090163559212153236671),
    (0.9, 0.8, -5.0, -0.012935645132124548195),
    (0.9, 0.8, -2.0, 0.055767806660269981931),
    (0.9, 0.8, -1.0, 0.23429190267736344892),
    (0.9, 0.8, -0.3, 0.58434143011787081702),
    (0.9, 0.8, 0.4, 1.4331518982015535201),
    (0.9, 0.8, 1.0, 3.092076879193918175),
    (0.9, 0.8, 3.0, 42.084351931864519025),
    (0.9, 0.8, 7.0, 1.0171520609877834481e+4),
    (0.9, 0.8, 15.0, 1.2838776163052767334e+9),
    (0.9, 0.8, 50.0, 9.1339308107706176904e+33),
    (0.9, 2.0, -1000.0, 0.0010509189468027871704),
    (0.9, 2.0, -200.0, 0.0052502098857387060046),
    (0.9, 2.0, -50.0, 0.020933665399611777989),
    (0.9, 2.0, -20.0, 0.051979946729880640936),
    (0.9, 2.0, -10.0, 0.10264335131060805751),
    (0.9, 2.0, -5.0, 0.19845803684071396074),
    (0.9, 2.0, -2.0, 0.41896056446508772408),
    (0.9, 2.0, -1.0, 0.61431564477296476897),
    (0.9, 2.0, -0.3, 0.85337491950020290447),
    (0.9, 2.0, 0.4, 1.2575821046775243131),
    (0.9, 2.0, 1.0, 1.8455666113260700413),
    (0.9, 2.0, 3.0, 9.3509010402901789451),
    (0.9, 2.0, 7.0, 759.45115599019292838),
    (0.9, 2.0, 15.0, 3.4705791039801485124e+7),
    (0.9, 2.0, 50.0, 4.9586605403029541267e+31),
    (0.9, 3.0, -1000.0, 9.5449030658786535692e-4),
    (0.9, 3.0, -200.0, 0.0047507093262895511333),
    (0.9, 3.0, -50.0, 0.018678651036922557182),
    (0.9, 3.0, -20.0, 0.045099766831787262685),
    (0.9, 3.0, -10.0, 0.085033402558534492539),
    (0.9, 3.0, -5.0, 0.15085822185984862185),
    (0.9, 3.0, -2.0, 0.27015710800782411895),
    (0.9, 3.0, -1.0, 0.35601247954629361984),
    (0.9, 3.0, -0.3, 0.44808450407134960429),
    (0.9, 3.0, 0.4, 0.58541347189244770827),
    (0.9, 3.0, 1.0, 0.76208959960923722672),
    (0.9, 3.0, 3.0, 2.4180145318573823699),
    (0.9, 3.0, 7.0, 87.256216525568180676),
    (0.9, 3.0, 15.0, 1.7125129546007007137e+6),
    (0.9, 3.0, 50.0, 6.4212551809434216248e+29),
    (0.99, 1.0, -1000.0, 1.007694492000443779e-5),
    (0.99, 1.0, -200.0, 5.0788286036312367674e-5),
    (0.99, 1.0, -50.0, 2.095764990060077155e-4),
    (0.99, 1.0, -20.0, 5.6162348367495294963e-4),
    (0.99, 1.0, -10.0, 0.0013478638060832084404),
    (0.99, 1.0, -5.0, 0.0097680921391741281708),
    (0.99, 1.0, -2.0, 0.13821728069806402839),
    (0.99, 1.0, -1.0, 0.3685483180603396169),
    (0.99, 1.0, -0.3, 0.74023850142995859238),
    (0.99, 1.0, 0.4, 1.4954726937785637395),
    (0.99, 1.0, 1.0, 2.7416571893307095386),
    (0.99, 1.0, 3.0, 20.976948519286249858),
    (0.99, 1.0, 7.0, 1272.8326814992421217),
    (0.99, 1.0, 15.0, 5.0053821432184333174e+6),
    (0.99, 1.0, 50.0, 3.9294655579287021496e+22),
    (0.99, 0.5, -1000.0, -2.8228341481300692021e-4),
    (0.99, 0.5, -200.0, -0.0014198705767912419909),
    (0.99, 0.5, -50.0, -0.0058126619886926811887),
    (0.99, 0.5, -20.0, -0.015290190311382750855),
    (0.99, 0.5, -10.0, -0.034048884616643552421),
    (0.99, 0.5, -5.0, -0.086247133680177148428),
    (0.99, 0.5, -2.0, -0.15205607144621256563),
    (0.99, 0.5, -1.0, -0.039204316634988052128),
    (0.99, 0.5, -0.3, 0.28651493696262251828),
    (0.99, 0.5, 0.4, 1.1601955768191662987),
    (0.99, 0.5, 1.0, 2.8828806755868287898),
    (0.99, 0.5, 3.0, 36.605717843008069849),
    (0.99, 0.5, 7.0, 3400.8949646802668694),
    (0.99, 0.5, 15.0, 1.9652722629116926099e+7),
    (0.99, 0.5, 50.0, 2.8339954278629096842e+23),
    (0.99, 0.8, -1000.0, -1.6494799970326210069e-4),
    (0.99, 0.8, -200.0, -8.2850464149780294622e-4),
    (0.99, 0.8, -50.0, -0.0033728437086196317329),
    (0.99, 0.8, -20.0, -0.0087593903225845440236),
    (0.99, 0.8, -10.0, -0.018871162202269841148),
    (0.99, 0.8, -5.0, -0.038792147222955872596),
    (0.99, 0.8, -2.0, 0.019594263644459831275),
    (0.99, 0.8, -1.0, 0.21667020172014456025),
    (0.99, 0.8, -0.3, 0.58500789493073010787),
    (0.99, 0.8, 0.4, 1.4024541637864103552),
    (0.99, 0.8, 1.0, 2.8377255848299721844),
    (0.99, 0.8, 3.0, 26.234252787146359483),
    (0.99, 0.8, 7.0, 1885.8333690537182235),
    (0.99, 0.8, 15.0, 8.6503052743705274958e+6),
    (0.99, 0.8, 50.0, 8.6608347046608213989e+22),
    (0.99, 2.0, -1000.0, 0.0010056862732034265785),
    (0.99, 2.0, -200.0, 0.0050280232543630198552),
    (0.99, 2.0, -50.0, 0.020105790322682640352),
    (0.99, 2.0, -20.0, 0.050230465932753007879),
    (0.99, 2.0, -10.0, 0.10032170157791219742),
    (0.99, 2.0, -5.0, 0.19867026192755766682),
    (0.99, 2.0, -2.0, 0.43090282343436372616),
    (0.99, 2.0, -1.0, 0.63027731695026152047),
    (0.99, 2.0, -0.3, 0.86288497308249714758),
    (0.99, 2.0, 0.4, 1.2322282362585921812),
    (0.99, 2.0, 1.0, 1.7298123571221659647),
    (0.99, 2.0, 3.0, 6.5790126538256977599),
    (0.99, 2.0, 7.0, 178.15022413080404053),
    (0.99, 2.0, 15.0, 3.2468795770038672514e+5),
    (0.99, 2.0, 50.0, 7.5544381345920391588e+20),
    (0.99, 3.0, -1000.0, 9.9473778700773132664e-4),
    (0.99, 3.0, -200.0, 0.0049534669868329437503),
    (0.99, 3.0, -50.0, 0.019510718722683187338),
    (0.99, 3.0, -20.0, 0.047263342383993964973),
    (0.99, 3.0, -10.0, 0.089498488307039230772),
    (0.99, 3.0, -5.0, 0.15929653890639645012),
    (0.99, 3.0, -2.0, 0.28244158345942089005),
    (0.99, 3.0, -1.0, 0.36670030563203801041),
    (0.99, 3.0, -0.3, 0.4530080187982090367),
    (0.99, 3.0, 0.4, 0.57498061442488004535),
    (0.99, 3.0, 1.0, 0.72222815442378742923),
    (0.99, 3.0, 3.0, 1.8347251161642546947),
    (0.99, 3.0, 7.0, 24.811888260256780878),
    (0.99, 3.0, 15.0, 2.1061720289541926037e+4),
    (0.99, 3.0, 50.0, 1.452348536666164657e+19),
    (1.0, 1.0, -1000.0, -9.8199819332484620727e-43),
    (1.0, 1.0, -200.0, 5.0582866213064070485e-42),
    (1.0, 1.0, -50.0, 1.928749847963917783e-22),
    (1.0, 1.0, -20.0, 2.061153622438557828e-9),
    (1.0, 1.0, -10.0, 4.5399929762484851536e-5),
    (1.0, 1.0, -5.0, 0.0067379469990854670966),
    (1.0, 1.0, -2.0, 0.13533528323661269189),
    (1.0, 1.0, -1.0, 0.3678794411714423216),
    (1.0, 1.0, -0.3, 0.74081822068171787429),
    (1.0, 1.0, 0.4, 1.491824697641270351),
    (1.0, 1.0, 1.0, 2.7182818284590452354),
    (1.0, 1.0, 3.0, 20.085536923187667741),
    (1.0, 1.0, 7.0, 1096.6331584284585993),
    (1.0, 1.0, 15.0, 3.2690173724721106393e+6),
    (1.0, 1.0, 50.0, 5.1847055285870724641e+21),
    (1.0, 0.5, -1000.0, -2.8251899553625571528e-4),
    (1.0, 0.5, -200.0, -0.0014211871130998988975),
    (1.0, 0.5, -50.0, -0.0058202680349559122325),
    (1.0, 0.5, -20.0, -0.015325407164895395749),
    (1.0, 0.5, -10.0, -0.03427543110755518105),
    (1.0, 0.5, -5.0, -0.088606475886827649911),
    (1.0, 0.5, -2.0, -0.15795962698142063189),
    (1.0, 0.5, -1.0, -0.042968122293637442167),
    (1.0, 0.5, -0.3, 0.28590661974222296863),
    (1.0, 0.5, 0.4, 1.1575710286207580633),
    (1.0, 0.5, 1.0, 2.8548878358509945179),
    (1.0, 0.5, 3.0, 34.855670388507185914),
    (1.0, 0.5, 7.0, 2901.4523960786864387),
    (1.0, 0.5, 15.0, 1.2660849859229456072e+7),
    (1.0, 0.5, 50.0, 3.6661404377193022694e+22),
    (1.0, 0.8, -1000.0, -1.7199400370568070555e-4),
    (1.0, 0.8, -200.0, -8.6414825777973521672e-4),
    (1.0, 0.8, -50.0, -0.0035220882108385587446),
    (1.0, 0.8, -20.0, -0.00917314585940808768),
    (1.0, 0.8, -10.0, -0.019923673634233946048),
    (1.0, 0.8, -5.0, -0.041949759780255566418),
    (1.0, 0.8, -2.0, 0.015382284876385946098),
    (1.0, 0.8, -1.0, 0.21485261899064792736),
    (1.0, 0.8, -0.3, 0.58519450558111342334),
    (1.0, 0.8, 0.4, 1.399040400949331574),
    (1.0, 0.8, 1.0, 2.81221471659960394),
    (1.0, 0.8, 3.0, 25.064284827482005462),
    (1.0, 0.8, 7.0, 1618.4030500546315659),
    (1.0, 0.8, 15.0, 5.618695301248879272e+6),
    (1.0, 0.8, 50.0, 1.1337520779042280559e+22),
    (1.0, 2.0, -1000.0, 0.001),
    (1.0, 2.0, -200.0, 0.005),
    (1.0, 2.0, -50.0, 0.02),
    (1.0, 2.0, -20.0, 0.049999999896942318878),
    (1.0, 2.0, -10.0, 0.099995460007023751515),
    (1.0, 2.0, -5.0, 0.19865241060018290658),
    (1.0, 2.0, -2.0, 0.43233235838169365405),
    (1.0, 2.0, -1.0, 0.6321205588285576784),
    (1.0, 2.0, -0.3, 0.86393926439427378433),
    (1.0, 2.0, 0.4, 1.2295617441031758091),
    (1.0, 2.0, 1.0, 1.7182818284590452354),
    (1.0, 2.0, 3.0, 6.3618456410625559136),
    (1.0, 2.0, 7.0, 156.51902263263694275),
    (1.0, 2.0, 15.0, 2.1793442483147404262e+5),
    (1.0, 2.0, 50.0, 1.0369411057174144928e+20),
    (1.0, 3.0, -1000.0, 9.99e-4),
    (1.0, 3.0, -200.0, 0.004975),
    (1.0, 3.0, -50.0, 0.0196),
    (1.0, 3.0, -20.0, 0.047500000005152884056),
    (1.0, 3.0, -10.0, 0.090000453999297624849),
    (1.0, 3.0, -5.0, 0.16026951787996341868),
    (1.0, 3.0, -2.0, 0.28383382080915317297),
    (1.0, 3.0, -1.0, 0.3678794411714423216),
    (1.0, 3.0, -0.3, 0.45353578535242073567),
    (1.0, 3.0, 0.4, 0.57390436025793949094),
    (1.0, 3.0, 1.0, 0.71828182845904523536),
    (1.0, 3.0, 3.0, 1.7872818803541853045),
    (1.0, 3.0, 7.0, 22.217003233233848965),
    (1.0, 3.0, 15.0, 1.4528894988764936175e+4),
    (1.0, 3.0, 50.0, 2.0738822114348289856e+18),
    (1.3, 1.0, -1000.0, -2.3154826146248248693e-4),
    (1.3, 1.0, -200.0, -0.0011664556086413382267),
    (1.3, 1.0, -50.0, -0.0047980384927972319513),
    (1.3, 1.0, -20.0, -0.011841120110029619668),
    (1.3, 1.0, -10.0, -0.040670092992621639599),
    (1.3, 1.0, -5.0, -0.13275950847306692671),
    (1.3, 1.0, -2.0, 0.054347504824621371856),
    (1.3, 1.0, -1.0, 0.36894184906938253764),
    (1.3, 1.0, -0.3, 0.76582016965489846753),
    (1.3, 1.0, 0.4, 1.3891424533490126247),
    (1.3, 1.0, 1.0, 2.1810051270854549784),
    (1.3, 1.0, 3.0, 7.9403113790714330495),
    (1.3, 1.0, 7.0, 67.063290476845514372),
    (1.3, 1.0, 15.0, 2361.5833193989175816),
    (1.3, 1.0, 50.0, 4.8994059740251090061e+8),
    (1.3, 0.5, -1000.0, -1.7404065530093706806e-4),
    (1.3, 0.5, -200.0, -8.6550021879940142793e-4),
    (1.3, 0.5, -50.0, -0.0033722776825410361363),
    (1.3, 0.5, -20.0, -0.0077147106935093357242),
    (1.3, 0.5, -10.0, 0.0054427670078376333579),
    (1.3, 0.5, -5.0, -0.2141472607194635346),
    (1.3, 0.5, -2.0, -0.36998261869320716401),
    (1.3, 0.5, -1.0, -0.14060097185201252789),
    (1.3, 0.5, -0.3, 0.28048622892692007954),
    (1.3, 0.5, 0.4, 1.0731458276667425855),
    (1.3, 0.5, 1.0, 2.2068473479150128857),
    (1.3, 0.5, 3.0, 12.094482735581785124),
    (1.3, 0.5, 7.0, 141.71975136793035624),
    (1.3, 0.5, 15.0, 6691.8211366290393275),
    (1.3, 0.5, 50.0, 2.2059386453774442485e+9),
    (1.3, 0.8, -1000.0, -2.8240777588812111327e-4),
    (1.3, 0.8, -200.0, -0.0014182231214437376757),
    (1.3, 0.8, -50.0, -0.005759385196543165933),
    (1.3, 0.8, -20.0, -0.013808414608160164705),
    (1.3, 0.8, -10.0, -0.038232703448608217759),
    (1.3, 0.8, -5.0, -0.19370738414138656725),
    (1.3, 0.8, -2.0, -0.11744043524057579753),
    (1.3, 0.8, -1.0, 0.1815910736613787365),
    (1.3, 0.8, -0.3, 0.60076836303241485042),
    (1.3, 0.8, 0.4, 1.2992072199705058965),
    (1.3, 0.8, 1.0, 2.2239349918678522782),
    (1.3, 0.8, 3.0, 9.4113848887016640897),
    (1.3, 0.8, 7.0, 90.467936740150800494),
    (1.3, 0.8, 15.0, 3582.1187495413337704),
    (1.3, 0.8, 50.0, 8.9438277822904796899e+8),
    (1.3, 2.0, -1000.0, 7.7065385666249715991e-4),
    (1.3, 2.0, -200.0, 0.0038586997898782861609),
    (1.3, 2.0, -50.0, 0.015517010254761666492),
    (1.3, 2.0, -20.0, 0.039163915445466149985),
    (1.3, 2.0, -10.0, 0.079960948521173529446),
    (1.3, 2.0, -5.0, 0.19654197272430155093),
    (1.3, 2.0, -2.0, 0.48781947260872171375),
    (1.3, 2.0, -1.0, 0.69308524701588641852),
    (1.3, 2.0, -0.3, 0.89466983221478883161),
    (1.3, 2.0, 0.4, 1.161676634304094702),
    (1.3, 2.0, 1.0, 1.4582900528656489403),
    (1.3, 2.0, 3.0, 3.1552880566820741652),
    (1.3, 2.0, 7.0, 14.89993876977673717),
    (1.3, 2.0, 15.0, 294.06341983342983143),
    (1.3, 2.0, 50.0, 2.4168150893969315416e+7),
    (1.3, 3.0, -1000.0, 0.0011000964871793779328),
    (1.3, 3.0, -200.0, 0.0054914548926088485433),
    (1.3, 3.0, -50.0, 0.021829946172476804918),
    (1.3, 3.0, -20.0, 0.05389051469737712419),
    (1.3, 3.0, -10.0, 0.10585100829183109193),
    (1.3, 3.0, -5.0, 0.19435885370228850319),
    (1.3, 3.0, -2.0, 0.32761544893230161888),
    (1.3, 3.0, -1.0, 0.40177036851695089207),
    (1.3, 3.0, -0.3, 0.46754014448288870481),
    (1.3, 3.0, 0.4, 0.54788040173270423589),
    (1.3, 3.0, 1.0, 0.630986824347457698),
    (1.3, 3.0, 3.0, 1.0432979003060378473),
    (1.3, 3.0, 7.0, 3.1925765381006949582),
    (1.3, 3.0, 15.0, 36.554041659143200116),
    (1.3, 3.0, 50.0, 1.1921843394959653201e+6),
    (1.7, 1.0, -1000.0, -2.3297266777740425547e-4),
    (1.7, 1.0, -200.0, -0.0034949002776333605472),
    (1.7, 1.0, -50.0, -0.079622866737131033817),
    (1.7, 1.0, -20.0, 0.17585130935289226972),
    (1.7, 1.0, -10.0, -0.35699383237274909499),
    (1.7, 1.0, -5.0, -0.48659032255574780567),
    (1.7, 1.0, -2.0, 0.048188540521817134299),
    (1.7, 1.0, -1.0, 0.44454443263222340218),
    (1.7, 1.0, -0.3, 0.81447774583551853191),
    (1.7, 1.0, 0.4, 1.2751944334828443046),
    (1.7, 1.0, 1.0, 1.7533626795154627628),
    (1.7, 1.0, 3.0, 4.0457501246531225646),
    (1.7, 1.0, 7.0, 13.648228842648178517),
    (1.7, 1.0, 15.0, 80.474297127024075793),
    (1.7, 1.0, 50.0, 1.2777370710054853988e+4),
    (1.7, 0.5, -1000.0, 2.0768503373767874791e-4),
    (1.7, 0.5, -200.0, -0.0082560810883056584887),
    (1.7, 0.5, -50.0, -0.10457070219763100549),
    (1.7, 0.5, -20.0, 0.57009878603342077094),
    (1.7, 0.5, -10.0, -0.02930502139869860535),
    (1.7, 0.5, -5.0, -0.86492565318354668103),
    (1.7, 0.5, -2.0, -0.61434765027805622963),
    (1.7, 0.5, -1.0, -0.17019464664676868606),
    (1.7, 0.5, -0.3, 0.3084594292516812782),
    (1.7, 0.5, 0.4, 0.95848368485403310606),
    (1.7, 0.5, 1.0, 1.6775541843780662605),
    (1.7, 0.5, 3.0, 5.494129726659712414),
    (1.7, 0.5, 7.0, 24.115342163423970396),
    (1.7, 0.5, 15.0, 178.42203721224452222),
    (1.7, 0.5, 50.0, 4.0377399401685315522e+4),
    (1.7, 0.8, -1000.0, -9.3171792435566135673e-5),
    (1.7, 0.8, -200.0, -0.0049862747098855545371),
    (1.7, 0.8, -50.0, -0.10488627421923768597),
    (1.7, 0.8, -20.0, 0.32077296475026001688),
    (1.7, 0.8, -10.0, -0.3123337158183944829),
    (1.7, 0.8, -5.0, -0.67548849972766720224),
    (1.7, 0.8, -2.0, -0.20224666153876970198),
    (1.7, 0.8, -1.0, 0.22615748929839480127),
    (1.7, 0.8, -0.3, 0.64460098935967120762),
    (1.7, 0.8, 0.4, 1.181108846294595115),
    (1.7, 0.8, 1.0, 1.7504381643967151814),
    (1.7, 0.8, 3.0, 4.581566904867356405),
    (1.7, 0.8, 7.0, 17.138780419177374336),
    (1.7, 0.8, 15.0, 110.65377450749553759),
    (1.7, 0.8, 50.0, 2.0245112733415708922e+4),
    (1.7, 2.0, -1000.0, 3.3389550053965561623e-4),
    (1.7, 2.0, -200.0, 0.0017194871611398103186),
    (1.7, 2.0, -50.0, 0.0072847462251222602624),
    (1.7, 2.0, -20.0, -0.017660622501788366108),
    (1.7, 2.0, -10.0, -0.0014205257363860975778),
    (1.7, 2.0, -5.0, 0.23904359100306967496),
    (1.7, 2.0, -2.0, 0.60152078158002471063),
    (1.7, 2.0, -1.0, 0.78153771987611326975),
    (1.7, 2.0, -0.3, 0.93005602000760302855),
    (1.7, 2.0, 0.4, 1.0995704397658040518),
    (1.7, 2.0, 1.0, 1.2633824484884764637),
    (1.7, 2.0, 3.0, 1.9554839525142315607),
    (1.7, 2.0, 7.0, 4.2797792556566542699),
    (1.7, 2.0, 15.0, 16.334634797409748195),
    (1.7, 2.0, 50.0, 1279.5135314551803629),
    (1.7, 3.0, -1000.0, 0.0011145108739055618707),
    (1.7, 3.0, -200.0, 0.0055811132968994795141),
    (1.7, 3.0, -50.0, 0.023104373460669211017),
    (1.7, 3.0, -20.0, 0.054027753766813476166),
    (1.7, 3.0, -10.0, 0.14096977293153259219),
    (1.7, 3.0, -5.0, 0.26198325652129970792),
    (1.7, 3.0, -2.0, 0.38577292963094810473),
    (1.7, 3.0, -1.0, 0.43919150206306974271),
    (1.7, 3.0, -0.3, 0.48092849450074154743),
    (1.7, 3.0, 0.4, 0.52659599761904668738),
    (1.7, 3.0, 1.0, 0.56912161175090037248),
    (1.7, 3.0, 3.0, 0.7365259539110947945),
    (1.7, 3.0, 7.0, 1.2246073083775152665),
    (1.7, 3.0, 15.0, 3.2528690748659916755),
    (1.7, 3.0, 50.0, 128.10848951517993946),
    (2.0, 1.0, -1000.0, 0.97868269655989227828),
    (2.0, 1.0, -200.0, -0.0049686621325937736153),
    (2.0, 1.0, -50.0, 0.70534790630844231151),
    (2.0, 1.0, -20.0, -0.23794839198059109428),
    (2.0, 1.0, -10.0, -0.99978607287932590758),
    (2.0, 1.0, -5.0, -0.61727287645716659406),
    (2.0, 1.0, -2.0, 0.15594369476537447345),
    (2.0, 1.0, -1.0, 0.5403023058681397174),
    (2.0, 1.0, -0.3, 0.85371270022473370106),
    (2.0, 1.0, 0.4, 1.2067561933066299213),
    (2.0, 1.0, 1.0, 1.5430806348152437785),
    (2.0, 1.0, 3.0, 2.9145774401759281607),
    (2.0, 1.0, 7.0, 7.0824910668673288215),
    (2.0, 1.0, 15.0, 24.05321230768562173),
    (2.0, 1.0, 50.0, 588.70272958758726384),
    (2.0, 0.5, -1000.0, 3.0753519275146754801),
    (2.0, 0.5, -200.0, -2.6702949847685620598),
    (2.0, 0.5, -50.0, 7.9223703312524458906e-4),
    (2.0, 0.5, -20.0, 1.1127389733030890856),
    (2.0, 0.5, -10.0, -1.2035813211302018843),
    (2.0, 0.5, -5.0, -1.4400945980289062494),
    (2.0, 0.5, -2.0, -0.6231055547334122767),
    (2.0, 0.5, -1.0, -0.10549467602990728001),
    (2.0, 0.5, -0.3, 0.34615799492918535008),
    (2.0, 0.5, 0.4, 0.87907031807540316801),
    (2.0, 0.5, 1.0, 1.4059598567786785379),
    (2.0, 0.5, 3.0, 3.6944723668701125383),
    (2.0, 0.5, 7.0, 11.420827916314293463),
    (2.0, 0.5, 15.0, 47.283477371805087603),
    (2.0, 0.5, 50.0, 1565.4359387538907895),
    (2.0, 0.8, -1000.0, 1.730730090424391191),
    (2.0, 0.8, -200.0, -0.53193332046361974898),
    (2.0, 0.8, -50.0, 0.67175839528990475815),
    (2.0, 0.8, -20.0, 0.10786555905575631654),
    (2.0, 0.8, -10.0, -1.1746236179089933929),
    (2.0, 0.8, -5.0, -0.95127353548041977074),
    (2.0, 0.8, -2.0, -0.12530471722556401379),
    (2.0, 0.8, -1.0, 0.31653736810918809872),
    (2.0, 0.8, -0.3, 0.68498319200384663753),
    (2.0, 0.8, 0.4, 1.1066301717154317122),
    (2.0, 0.8, 1.0, 1.5135336677951259337),
    (2.0, 0.8, 3.0, 3.2104876718312383999),
    (2.0, 0.8, 7.0, 8.5709556380702405766),
    (2.0, 0.8, 15.0, 31.515141813528334184),
    (2.0, 0.8, 50.0, 870.54357697877126895),
    (2.0, 2.0, -1000.0, 0.0064946269680604301001),
    (2.0, 2.0, -200.0, 0.07070980527467927233),
    (2.0, 2.0, -50.0, 0.10024812527586706814),
    (2.0, 2.0, -20.0, -0.21718431835123950447),
    (2.0, 2.0, -10.0, -0.0065407069689386402128),
    (2.0, 2.0, -5.0, 0.35184490787569899038),
    (2.0, 2.0, -2.0, 0.69845599863660835984),
    (2.0, 2.0, -1.0, 0.84147098480789650665),
    (2.0, 2.0, -0.3, 0.95074466511781171036),
    (2.0, 2.0, 0.4, 1.068012769216628253),
    (2.0, 2.0, 1.0, 1.1752011936438014569),
    (2.0, 2.0, 3.0, 1.5805865635666680242),
    (2.0, 2.0, 7.0, 2.650112658312998523),
    (2.0, 2.0, 15.0, 6.2051431480592456048),
    (2.0, 2.0, 50.0, 83.255018326089616307),
    (2.0, 3.0, -1000.0, 2.1317303440107721723e-5),
    (2.0, 3.0, -200.0, 0.0050248433106629688681),
    (2.0, 3.0, -50.0, 0.0058930418738311537697),
    (2.0, 3.0, -20.0, 0.061897419599029554714),
    (2.0, 3.0, -10.0, 0.19997860728793259076),
    (2.0, 3.0, -5.0, 0.32345457529143331881),
    (2.0, 3.0, -2.0, 0.42202815261731276327),
    (2.0, 3.0, -1.0, 0.4596976941318602826),
    (2.0, 3.0, -0.3, 0.48762433258422101452),
    (2.0, 3.0, 0.4, 0.51689048326657477451),
    (2.0, 3.0, 1.0, 0.54308063481524377848),
    (2.0, 3.0, 3.0, 0.63819248005864272024),
    (2.0, 3.0, 7.0, 0.86892729526676126021),
    (2.0, 3.0, 15.0, 1.536880820512374782),
    (2.0, 3.0, 50.0, 11.754054591751745277),
];

// (z, Gamma(z))
pub const GAMMA_REFERENCE: &[(f64, f64)] = &[
    (0.1, 9.5135076986687312858),
    (0.25, 3.6256099082219083119),
    (0.5, 1.7724538509055160273),
    (0.9, 1.068628702119319337),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.3, 2.6834373819557683003),
    (7.7, 2769.830362327314632),
    (12.1, 50983227.844116156551),
    (20.5, 540624298233507504.47),
    (33.3, 7.4875775965226323274e+35),
    (49.9, 4.1180110342530352191e+62),
    (50.0, 6.0828186403426756087e+62),
];
