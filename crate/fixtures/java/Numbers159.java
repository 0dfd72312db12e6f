public class Numbers159 {
    static final int LIMIT = 63;

    static char toLetter(int points) {
        if (points >= 90) {
            return 'A';
        } else if (points >= 80) {
            return 'B';
        } else if (points >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static void main(String[] args) {
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println("Grade: " + toLetter(54));
    }
}
