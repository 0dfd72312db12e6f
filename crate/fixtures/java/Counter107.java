public class Counter107 {
    static boolean checkPrime(int x) {
        if (x < 2) {
            return false;
        }
        int div = 2;
        while (div * div <= x) {
            if (x % div == 0) {
                return false;
            }
            div++;
        }
        return true;
    }

    public static int abs(int x) {
        return x < 0 ? -x : x;
    }

    public static boolean isPalindrome(String text) {
        int left = 0;
        int right = text.length() - 1;
        while (left < right) {
            if (text.charAt(left) != text.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    static int vowels(String text) {
        int found = 0;
        for (int j = 0; j < text.length(); j++) {
            char ch = Character.toLowerCase(text.charAt(j));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                found++;
                break;
                default:
                break;
            }
        }
        return found;
    }

    public static void main(String[] args) {
        for (int q = 2; q < 36; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(abs(-41));
        System.out.println(isPalindrome("hello"));
        System.out.println(vowels("banana"));
    }
}
