public class Quiz67 {
    static final int LIMIT = 97;

    static char grade(int mark) {
        if (mark >= 90) {
            return 'A';
        } else if (mark >= 80) {
            return 'B';
        } else if (mark >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    static int fibonacci(int x) {
        int first = 0;
        int second = 1;
        for (int j = 0; j < x; j++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    public static int addAll(int[] data) {
        int acc = 0;
        for (int j = 0; j < data.length; j++) {
            acc += data[j];
        }
        return acc;
    }

    public static double celsiusToF(double degrees) {
        return degrees * 9 / 5 + 32;
    }

    public static int toNumber(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static void main(String[] args) {
        int[] numbers = {5, 3, 6, 7, 2};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println("Grade: " + grade(43));
        System.out.println("Fib: " + fibonacci(8));
        System.out.println("Sum: " + addAll(numbers));
        System.out.println(celsiusToF(18.0));
        int parsed = toNumber(" 7 ");
        System.out.println(parsed);
    }
}
